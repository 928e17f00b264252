// Copyright 2026 The Pairsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pairsum/model_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pairsum {

using nlohmann::json;

namespace {
constexpr const char* kFormatName = "pairsum-cache-ngram";
}  // namespace

std::string SerializeModel(const CacheInterpolatedLM& lm) {
  const NGramLM& bg = lm.background();
  json counts = json::array();
  for (const auto& [context, successors] : bg.counts()) {
    json next = json::array();
    for (const auto& [id, count] : successors.next) {
      next.push_back({id, count});
    }
    counts.push_back({{"context", context}, {"next", std::move(next)}});
  }
  json doc = {
      {"format", kFormatName},
      {"version", kModelFormatVersion},
      {"order", bg.order()},
      {"cache_order", lm.cache_order()},
      {"epsilon", bg.epsilon()},
      {"lambda", lm.lambda()},
      {"vocabulary", bg.vocabulary().tokens()},
      {"counts", std::move(counts)},
  };
  return doc.dump() + "\n";
}

CacheInterpolatedLM DeserializeModel(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
    if (doc.at("format") != kFormatName) {
      throw std::runtime_error("not a pairsum model file");
    }
    if (doc.at("version").get<int>() != kModelFormatVersion) {
      throw std::runtime_error("unsupported model version " +
                               doc.at("version").dump());
    }
    Vocabulary vocab = Vocabulary::FromTokens(
        doc.at("vocabulary").get<std::vector<std::string>>());
    const int order = doc.at("order").get<int>();
    const auto vocab_size = static_cast<TokenId>(vocab.size());
    CountTable counts;
    for (const auto& entry : doc.at("counts")) {
      auto context = entry.at("context").get<TokenSeq>();
      if (context.size() != static_cast<std::size_t>(order - 1)) {
        throw std::runtime_error("context length does not match order");
      }
      ContextCounts cc;
      for (const auto& pair : entry.at("next")) {
        const auto id = pair.at(0).get<TokenId>();
        const auto count = pair.at(1).get<std::uint64_t>();
        if (id <= Vocabulary::kBos || id >= vocab_size || count == 0) {
          throw std::runtime_error("invalid count entry");
        }
        cc.Add(id, count);
      }
      counts.emplace(std::move(context), std::move(cc));
    }
    NGramLM bg(order, doc.at("epsilon").get<double>(), std::move(vocab),
               std::move(counts));
    return CacheInterpolatedLM(std::move(bg), doc.at("lambda").get<double>(),
                               doc.at("cache_order").get<int>());
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed model file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed model file: ") + e.what());
  }
}

CacheInterpolatedLM LoadModelFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return DeserializeModel(buf.str());
}

}  // namespace pairsum
