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

#ifndef PAIRSUM_AGGREGATE_H_
#define PAIRSUM_AGGREGATE_H_

#include <span>

#include "pairsum/conditional_lm.h"
#include "pairsum/token_dist.h"

namespace pairsum {

inline constexpr double kDefaultRatioFloor = 1e-12;

// Contrastive co-decoding (product of experts with a ratio expert):
//   score(t) = target(t) * (target(t) / counter(t))^delta
// over the top-p nucleus of `target`. counter(t) is read from the
// renormalized nucleus of `counter` when t survives it, otherwise from the
// raw `counter` distribution, and is floored at `ratio_floor` either way.
TokenDist AggregateContrastive(const TokenDist& target, const TokenDist& counter,
                               double delta, double top_p,
                               double ratio_floor = kDefaultRatioFloor);

// Ablation: additive combination target(t) + delta * target(t) / counter(t),
// with the same candidate and floor rules as AggregateContrastive.
TokenDist AggregateContrastiveMoE(const TokenDist& target,
                                  const TokenDist& counter, double delta,
                                  double top_p,
                                  double ratio_floor = kDefaultRatioFloor);

// Variant dividing by the common-summary distribution instead of the
// counterpart entity's.
TokenDist AggregateContrastiveVsCommon(const TokenDist& target,
                                       const TokenDist& common, double delta,
                                       double top_p,
                                       double ratio_floor = kDefaultRatioFloor);

// Common co-decoding (mixture of experts):
//   score(t) = common(t) + gamma * (a(t) + b(t))
// Each input is truncated to its nucleus and renormalized first; candidates
// are the union of the three nuclei and absent entries count as zero.
TokenDist AggregateCommon(const TokenDist& common, const TokenDist& a,
                          const TokenDist& b, double gamma, double top_p);

// Ablation: common(t) * (a(t) * b(t))^gamma over the nucleus of `common`.
// Factors follow the nucleus-then-raw lookup of AggregateContrastive and are
// floored at `ratio_floor`.
TokenDist AggregateCommonPoE(const TokenDist& common, const TokenDist& a,
                             const TokenDist& b, double gamma, double top_p,
                             double ratio_floor = kDefaultRatioFloor);

// Order-symmetric common distribution: the mean of the model's outputs under
// (A, B) and (B, A) conditioning, renormalized.
TokenDist SymmetricCommonDist(const BoundLM& ab, const BoundLM& ba,
                              std::span<const TokenId> prefix);
TokenDist SymmetricCommonDist(const ConditionalLM& lm,
                              std::span<const TokenId> prefix,
                              const ReviewTokens& a, const ReviewTokens& b);

// Elementwise mean of two distributions over the union of their supports.
TokenDist MeanDist(const TokenDist& x, const TokenDist& y);

}  // namespace pairsum

#endif  // PAIRSUM_AGGREGATE_H_
