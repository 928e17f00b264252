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

#include "pairsum/ngram_lm.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace pairsum {

NGramLM NGramLM::Train(const std::vector<TokenSeq>& corpus, int order,
                       double epsilon, Vocabulary vocab) {
  if (corpus.empty()) throw std::invalid_argument("empty training corpus");
  if (order < 1) throw std::invalid_argument("n-gram order must be >= 1");
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("smoothing epsilon must be > 0");
  }
  const auto vocab_size = static_cast<TokenId>(vocab.size());
  CountTable counts;
  TokenSeq history;
  for (const auto& seq : corpus) {
    history.assign(order - 1, Vocabulary::kBos);
    for (std::size_t i = 0; i <= seq.size(); ++i) {
      const TokenId token = i < seq.size() ? seq[i] : Vocabulary::kEos;
      if (token < 0 || token >= vocab_size || token == Vocabulary::kBos) {
        throw std::invalid_argument("corpus token outside vocabulary: " +
                                    std::to_string(token));
      }
      TokenSeq context(history.end() - (order - 1), history.end());
      counts[std::move(context)].Add(token);
      history.push_back(token);
    }
  }
  return NGramLM(order, epsilon, std::move(vocab), std::move(counts));
}

NGramLM::NGramLM(int order, double epsilon, Vocabulary vocab,
                 CountTable counts)
    : order_(order),
      epsilon_(epsilon),
      vocab_(std::move(vocab)),
      counts_(std::move(counts)) {
  if (order_ < 1) throw std::invalid_argument("n-gram order must be >= 1");
  if (!(epsilon_ > 0.0)) {
    throw std::invalid_argument("smoothing epsilon must be > 0");
  }
}

TokenSeq NGramLM::ContextOf(std::span<const TokenId> prefix) const {
  const std::size_t width = order_ - 1;
  TokenSeq context(width, Vocabulary::kBos);
  const std::size_t take = std::min(width, prefix.size());
  std::copy(prefix.end() - take, prefix.end(), context.end() - take);
  return context;
}

TokenDist NGramLM::NextDist(std::span<const TokenId> prefix) const {
  const auto support = PredictiveSize(vocab_);
  auto it = counts_.find(ContextOf(prefix));
  const ContextCounts* ctx = it == counts_.end() ? nullptr : &it->second;
  const double denom =
      (ctx ? static_cast<double>(ctx->total) : 0.0) +
      epsilon_ * static_cast<double>(support);

  std::vector<TokenDist::Entry> entries;
  entries.reserve(support);
  auto next = ctx ? ctx->next.begin() : std::map<TokenId, std::uint64_t>::const_iterator{};
  for (TokenId id = 1; id < static_cast<TokenId>(vocab_.size()); ++id) {
    double count = 0.0;
    if (ctx && next != ctx->next.end() && next->first == id) {
      count = static_cast<double>(next->second);
      ++next;
    }
    entries.push_back({id, (count + epsilon_) / denom});
  }
  Renormalize(&entries);
  return TokenDist(std::move(entries));
}

}  // namespace pairsum
