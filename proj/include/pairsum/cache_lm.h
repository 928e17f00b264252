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

#ifndef PAIRSUM_CACHE_LM_H_
#define PAIRSUM_CACHE_LM_H_

#include <memory>
#include <span>
#include <vector>

#include "pairsum/conditional_lm.h"
#include "pairsum/ngram_lm.h"

namespace pairsum {

// Maximum-likelihood n-gram statistics of the conditioning reviews, kept for
// every order 1..cache_order. Counts from two sets are pooled, so the result
// does not depend on the order of the sets.
class ReviewCache {
 public:
  ReviewCache(const Condition& condition, int cache_order);

  // Uses the longest context with observations, backing off to the unigram
  // distribution, which always exists. Support is a subset of the tokens in
  // the reviews plus EOS.
  TokenDist NextDist(std::span<const TokenId> prefix) const;

  int order() const { return order_; }

 private:
  int order_;
  // tables_[m] holds contexts of length m.
  std::vector<CountTable> tables_;
};

// Background n-gram model interpolated with a cache estimated from the
// conditioning reviews:
//   p(t) = lambda * cache(t | prefix, R) + (1 - lambda) * background(t | prefix)
class CacheInterpolatedLM final : public ConditionalLM {
 public:
  static constexpr double kDefaultLambda = 0.7;

  // cache_order <= 0 selects the background order.
  CacheInterpolatedLM(NGramLM background, double lambda, int cache_order = 0);

  std::unique_ptr<const BoundLM> Bind(const Condition& condition) const override;

  const NGramLM& background() const { return background_; }
  double lambda() const { return lambda_; }
  int cache_order() const { return cache_order_; }

 private:
  NGramLM background_;
  double lambda_;
  int cache_order_;
};

}  // namespace pairsum

#endif  // PAIRSUM_CACHE_LM_H_
