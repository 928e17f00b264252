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

#ifndef PAIRSUM_TESTS_TEST_UTIL_H_
#define PAIRSUM_TESTS_TEST_UTIL_H_

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pairsum/token_dist.h"

namespace pairsum::testing {

inline TokenDist Dist(std::initializer_list<std::pair<TokenId, double>> entries) {
  std::vector<TokenDist::Entry> e;
  for (const auto& [id, p] : entries) e.push_back({id, p});
  return TokenDist(std::move(e));
}

// Random normalized distribution over a random subset of ids [1, vocab).
inline TokenDist RandomDist(std::mt19937_64& rng, int vocab, int min_support = 1) {
  std::uniform_int_distribution<int> size_dist(min_support, vocab - 1);
  const int support = size_dist(rng);
  std::vector<TokenId> ids;
  for (int i = 1; i < vocab; ++i) ids.push_back(i);
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(support);
  std::gamma_distribution<double> g(0.7, 1.0);
  std::vector<TokenDist::Entry> e;
  for (TokenId id : ids) e.push_back({id, g(rng) + 1e-6});
  return TokenDist::FromScores(std::move(e));
}

inline std::string DataPath(const std::string& rel) {
  return std::string(PAIRSUM_SOURCE_DIR) + "/" + rel;
}

}  // namespace pairsum::testing

#endif  // PAIRSUM_TESTS_TEST_UTIL_H_
