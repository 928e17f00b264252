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

#include "pairsum/nucleus.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pairsum {
namespace {

// Cumulative sums such as 0.6 + 0.3 land a hair below 0.9 in binary.
constexpr double kCumulativeSlack = 1e-12;

}  // namespace

TokenDist TopPTruncate(const TokenDist& dist, double top_p) {
  if (!(top_p > 0.0 && top_p <= 1.0)) {
    throw std::invalid_argument("top_p must lie in (0, 1]");
  }
  if (top_p >= 1.0 || dist.size() <= 1) return dist;

  std::vector<TokenDist::Entry> sorted = dist.entries();
  std::sort(sorted.begin(), sorted.end(),
            [](const TokenDist::Entry& a, const TokenDist::Entry& b) {
              if (a.prob != b.prob) return a.prob > b.prob;
              return a.id < b.id;
            });
  double cumulative = 0.0;
  std::size_t keep = 0;
  while (keep < sorted.size()) {
    cumulative += sorted[keep].prob;
    ++keep;
    if (cumulative >= top_p - kCumulativeSlack) break;
  }
  if (keep == sorted.size()) return dist;
  sorted.resize(keep);
  return TokenDist::FromScores(std::move(sorted));
}

}  // namespace pairsum
