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

#include "pairsum/metrics.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pairsum {
namespace {

using NgramCounts = std::map<Words, std::size_t>;

NgramCounts CountNgrams(const Words& tokens, int n) {
  NgramCounts counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[Words(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return counts;
}

std::size_t LcsLength(const Words& a, const Words& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

TokenBag::TokenBag(const Words& tokens) {
  for (const auto& t : tokens) ++counts_[t];
  total_ = tokens.size();
}

std::size_t TokenBag::Count(const std::string& token) const {
  auto it = counts_.find(token);
  return it == counts_.end() ? 0 : it->second;
}

double Distinctiveness(const TokenBag& a, const TokenBag& b, const TokenBag& c,
                       BagSemantics semantics) {
  if (a.empty() || b.empty() || c.empty()) {
    throw std::invalid_argument("empty summary");
  }
  std::set<std::string> vocab;
  for (const TokenBag* bag : {&a, &b, &c}) {
    for (const auto& [token, count] : bag->counts()) vocab.insert(token);
  }
  std::size_t pairwise = 0, triple = 0, uni = 0;
  for (const auto& token : vocab) {
    std::size_t ca = a.Count(token), cb = b.Count(token), cc = c.Count(token);
    if (semantics == BagSemantics::kSet) {
      ca = std::min<std::size_t>(ca, 1);
      cb = std::min<std::size_t>(cb, 1);
      cc = std::min<std::size_t>(cc, 1);
    }
    pairwise += std::min(ca, cb) + std::min(ca, cc) + std::min(cb, cc);
    triple += std::min({ca, cb, cc});
    uni += std::max({ca, cb, cc});
  }
  const double overlap =
      static_cast<double>(pairwise) - 2.0 * static_cast<double>(triple);
  return 1.0 - overlap / static_cast<double>(uni);
}

RougeScore MakeRougeScore(double precision, double recall) {
  RougeScore s{precision, recall, 0.0};
  if (precision + recall > 0.0) {
    s.f1 = 2.0 * precision * recall / (precision + recall);
  }
  return s;
}

RougeScore RougeN(const Words& candidate, const Words& reference, int n) {
  if (n < 1) throw std::invalid_argument("ROUGE n must be >= 1");
  const NgramCounts cand = CountNgrams(candidate, n);
  const NgramCounts ref = CountNgrams(reference, n);
  if (cand.empty() || ref.empty()) return {};
  std::size_t overlap = 0, cand_total = 0, ref_total = 0;
  for (const auto& [gram, count] : cand) {
    cand_total += count;
    auto it = ref.find(gram);
    if (it != ref.end()) overlap += std::min(count, it->second);
  }
  for (const auto& [gram, count] : ref) ref_total += count;
  return MakeRougeScore(static_cast<double>(overlap) / cand_total,
                        static_cast<double>(overlap) / ref_total);
}

RougeScore RougeL(const Words& candidate, const Words& reference) {
  if (candidate.empty() || reference.empty()) return {};
  const auto lcs = static_cast<double>(LcsLength(candidate, reference));
  return MakeRougeScore(lcs / candidate.size(), lcs / reference.size());
}

RougeScore RougeMulti(const Words& candidate, const std::vector<Words>& references,
                      int kind) {
  if (references.empty()) throw std::invalid_argument("no reference summaries");
  RougeScore mean;
  for (const auto& ref : references) {
    const RougeScore s =
        kind == kRougeL ? RougeL(candidate, ref) : RougeN(candidate, ref, kind);
    mean.precision += s.precision;
    mean.recall += s.recall;
    mean.f1 += s.f1;
  }
  const auto k = static_cast<double>(references.size());
  mean.precision /= k;
  mean.recall /= k;
  mean.f1 /= k;
  return mean;
}

IntraPairScore IntraPair(const Words& contrastive_a, const Words& contrastive_b) {
  if (contrastive_a.empty() || contrastive_b.empty()) {
    throw std::invalid_argument("empty summary");
  }
  return {RougeN(contrastive_a, contrastive_b, 1).f1,
          RougeN(contrastive_a, contrastive_b, 2).f1,
          RougeL(contrastive_a, contrastive_b).f1};
}

double NovelNgramRate(const Words& summary, const Words& input, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (static_cast<int>(summary.size()) < n) {
    throw std::invalid_argument("summary too short");
  }
  const NgramCounts grams = CountNgrams(summary, n);
  const NgramCounts seen = CountNgrams(input, n);
  std::size_t novel = 0;
  for (const auto& [gram, count] : grams) {
    if (!seen.count(gram)) ++novel;
  }
  return static_cast<double>(novel) / static_cast<double>(grams.size());
}

}  // namespace pairsum
