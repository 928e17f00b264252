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

#ifndef PAIRSUM_TOKEN_DIST_H_
#define PAIRSUM_TOKEN_DIST_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pairsum/vocabulary.h"

namespace pairsum {

// Sparse probability distribution over token ids. Entries are kept sorted by
// id, every stored probability is strictly positive, and no id repeats.
class TokenDist {
 public:
  struct Entry {
    TokenId id;
    double prob;
    bool operator==(const Entry&) const = default;
  };

  TokenDist() = default;

  // Validates and sorts. Throws std::invalid_argument on non-positive or
  // non-finite probabilities or duplicate ids.
  explicit TokenDist(std::vector<Entry> entries);

  // Builds from unnormalized non-negative scores, dropping zero scores and
  // dividing by their sum. Throws if no score is positive.
  static TokenDist FromScores(std::vector<Entry> scores);

  // Returns 0 for ids outside the support.
  double Prob(TokenId id) const;
  bool Contains(TokenId id) const;

  double Sum() const;
  bool IsNormalized(double tol = 1e-9) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Copy without `id`, renormalized. Used to mask EOS before min_len.
  TokenDist Without(TokenId id) const;

  // Raw little-endian bytes of (id, prob) pairs; equal distributions produce
  // equal strings.
  std::string SerializeBytes() const;

  bool operator==(const TokenDist& other) const = default;

 private:
  std::vector<Entry> entries_;
};

// Divides by the entry sum unless it already equals 1 to within a few ulps,
// so normalized inputs pass through bit-exactly.
void Renormalize(std::vector<TokenDist::Entry>* entries);

}  // namespace pairsum

#endif  // PAIRSUM_TOKEN_DIST_H_
