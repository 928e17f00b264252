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

#ifndef PAIRSUM_NGRAM_LM_H_
#define PAIRSUM_NGRAM_LM_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pairsum/token_dist.h"
#include "pairsum/vocabulary.h"

namespace pairsum {

// Successor counts observed after one context.
struct ContextCounts {
  std::map<TokenId, std::uint64_t> next;
  std::uint64_t total = 0;

  void Add(TokenId token, std::uint64_t count = 1) {
    next[token] += count;
    total += count;
  }
  bool operator==(const ContextCounts&) const = default;
};

// Context (exactly order-1 ids, oldest first) to successor counts.
using CountTable = std::map<TokenSeq, ContextCounts>;

// Add-epsilon smoothed n-gram model. Sequences are padded with order-1 BOS
// on the left and one EOS on the right. BOS is never predicted, so the
// predictive support is every vocabulary id except BOS.
class NGramLM {
 public:
  // Throws std::invalid_argument for an empty corpus ("empty training
  // corpus"), order < 1, epsilon <= 0, or ids outside `vocab`.
  static NGramLM Train(const std::vector<TokenSeq>& corpus, int order,
                       double epsilon, Vocabulary vocab);

  // Rebuilds a model from stored parameters (used by model loading).
  NGramLM(int order, double epsilon, Vocabulary vocab, CountTable counts);

  // p(t | context) = (c(context, t) + eps) / (c(context, .) + eps * |V'|),
  // where V' is the vocabulary without BOS. `prefix` excludes the leading
  // BOS; short prefixes are BOS-padded.
  TokenDist NextDist(std::span<const TokenId> prefix) const;

  // Context key the model uses for `prefix`.
  TokenSeq ContextOf(std::span<const TokenId> prefix) const;

  int order() const { return order_; }
  double epsilon() const { return epsilon_; }
  const Vocabulary& vocabulary() const { return vocab_; }
  const CountTable& counts() const { return counts_; }

 private:
  int order_;
  double epsilon_;
  Vocabulary vocab_;
  CountTable counts_;
};

// Number of ids a model may emit for `vocab` (all but BOS).
inline std::size_t PredictiveSize(const Vocabulary& vocab) {
  return vocab.size() - 1;
}

}  // namespace pairsum

#endif  // PAIRSUM_NGRAM_LM_H_
