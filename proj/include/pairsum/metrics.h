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

#ifndef PAIRSUM_METRICS_H_
#define PAIRSUM_METRICS_H_

#include <map>
#include <string>
#include <vector>

namespace pairsum {

using Words = std::vector<std::string>;

// Multiset of tokens; every stored multiplicity is >= 1.
class TokenBag {
 public:
  TokenBag() = default;
  explicit TokenBag(const Words& tokens);

  std::size_t Count(const std::string& token) const;
  std::size_t TotalSize() const { return total_; }
  bool empty() const { return total_ == 0; }
  const std::map<std::string, std::size_t>& counts() const { return counts_; }

 private:
  std::map<std::string, std::size_t> counts_;
  std::size_t total_ = 0;
};

enum class BagSemantics {
  kMultiset,  // intersection = min count, union = max count
  kSet,       // every multiplicity collapsed to 1
};

// 1 - (sum of pairwise overlaps - 2 * triple overlap) / |union| over the two
// contrastive summaries and the common summary. Higher is more distinctive.
// Throws std::invalid_argument("empty summary") if any bag is empty.
double Distinctiveness(const TokenBag& a, const TokenBag& b, const TokenBag& c,
                       BagSemantics semantics = BagSemantics::kMultiset);

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Harmonic mean, 0 when P + R == 0.
RougeScore MakeRougeScore(double precision, double recall);

// Clipped n-gram overlap. Throws std::invalid_argument if n < 1.
RougeScore RougeN(const Words& candidate, const Words& reference, int n);

// Longest-common-subsequence based score.
RougeScore RougeL(const Words& candidate, const Words& reference);

// n >= 1 selects ROUGE-n; kRougeL selects ROUGE-L.
inline constexpr int kRougeL = 0;

// Means of per-reference precision, recall and F1. Throws
// std::invalid_argument for an empty reference list.
RougeScore RougeMulti(const Words& candidate, const std::vector<Words>& references,
                      int kind);

struct IntraPairScore {
  double rouge1 = 0.0;
  double rouge2 = 0.0;
  double rouge_l = 0.0;
};

// ROUGE F1 between the two contrastive summaries; lower is more distinctive.
// Throws std::invalid_argument if either summary is empty.
IntraPairScore IntraPair(const Words& contrastive_a, const Words& contrastive_b);

// Fraction of distinct summary n-grams that never occur in `input`.
// Throws std::invalid_argument("summary too short") if |summary| < n.
double NovelNgramRate(const Words& summary, const Words& input, int n);

}  // namespace pairsum

#endif  // PAIRSUM_METRICS_H_
