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

#include "pairsum/dataset.h"

#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "pairsum/tokenizer.h"

namespace pairsum {

Review MakeReview(std::string entity_id, std::string review_id, std::string text) {
  if (text.empty()) throw std::invalid_argument("review text is empty");
  const auto length = static_cast<int>(SplitWords(text).size());
  if (length < 1) throw std::invalid_argument("review text has no tokens");
  return Review{std::move(entity_id), std::move(review_id), std::move(text),
                length};
}

std::vector<EntityReviewSet> ParseReviews(std::istream& in) {
  std::vector<EntityReviewSet> sets;
  std::map<std::string, std::size_t> index;
  std::map<std::string, std::set<std::string>> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& why) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " + why);
    };
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      fail("invalid JSON");
    }
    if (!record.is_object()) fail("expected a JSON object");
    for (const char* field : {"entity_id", "review_id", "text"}) {
      if (!record.contains(field)) fail(std::string("missing \"") + field + "\"");
      if (!record[field].is_string()) {
        fail(std::string("\"") + field + "\" must be a string");
      }
    }
    auto entity = record["entity_id"].get<std::string>();
    auto review_id = record["review_id"].get<std::string>();
    if (!seen_ids[entity].insert(review_id).second) {
      fail("duplicate review_id \"" + review_id + "\" for entity \"" + entity + "\"");
    }
    Review review;
    try {
      review = MakeReview(entity, review_id, record["text"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    auto [it, inserted] = index.emplace(entity, sets.size());
    if (inserted) sets.push_back(EntityReviewSet{entity, {}});
    sets[it->second].reviews.push_back(std::move(review));
  }
  return sets;
}

std::vector<EntityReviewSet> LoadReviews(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read reviews file: " + path);
  return ParseReviews(in);
}

const EntityReviewSet* FindEntity(const std::vector<EntityReviewSet>& corpus,
                                  const std::string& entity_id) {
  for (const auto& set : corpus) {
    if (set.entity_id == entity_id) return &set;
  }
  return nullptr;
}

ReviewTokens EncodeReviews(const EntityReviewSet& set, const Vocabulary& vocab) {
  ReviewTokens out;
  out.reserve(set.reviews.size());
  for (const auto& r : set.reviews) out.push_back(Tokenize(r.text, vocab));
  return out;
}

}  // namespace pairsum
