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

#ifndef PAIRSUM_CONDITIONAL_LM_H_
#define PAIRSUM_CONDITIONAL_LM_H_

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "pairsum/token_dist.h"
#include "pairsum/vocabulary.h"

namespace pairsum {

// The encoded reviews of one entity.
using ReviewTokens = std::vector<TokenSeq>;

// One or two review sets a model is conditioned on, in order. The sets are
// borrowed and must outlive the Condition.
class Condition {
 public:
  explicit Condition(const ReviewTokens& single) : sets_{std::cref(single)} {}
  Condition(const ReviewTokens& first, const ReviewTokens& second)
      : sets_{std::cref(first), std::cref(second)} {}

  std::size_t size() const { return sets_.size(); }
  const ReviewTokens& operator[](std::size_t i) const { return sets_[i].get(); }

  // Same sets in reverse order.
  Condition Swapped() const;

 private:
  std::vector<std::reference_wrapper<const ReviewTokens>> sets_;
};

// A model with its conditioning fixed; yields p(. | prefix, condition).
class BoundLM {
 public:
  virtual ~BoundLM() = default;
  // `prefix` holds the generated tokens without the leading BOS. The result
  // is normalized and depends only on (prefix, condition).
  virtual TokenDist NextDist(std::span<const TokenId> prefix) const = 0;
};

// p(y_t | y_<t, R) for one review set R, or for an ordered pair of sets.
// Implementations are immutable and safe for concurrent use.
class ConditionalLM {
 public:
  virtual ~ConditionalLM() = default;

  // Precomputes whatever the model needs from `condition`. Throws
  // std::invalid_argument("empty conditioning set") if any set is empty.
  virtual std::unique_ptr<const BoundLM> Bind(
      const Condition& condition) const = 0;

  TokenDist NextDist(std::span<const TokenId> prefix,
                     const Condition& condition) const {
    return Bind(condition)->NextDist(prefix);
  }
};

}  // namespace pairsum

#endif  // PAIRSUM_CONDITIONAL_LM_H_
