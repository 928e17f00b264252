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

#include "pairsum/token_dist.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace pairsum {
namespace {

constexpr double kExactSumTolerance = 1e-14;

bool ById(const TokenDist::Entry& a, const TokenDist::Entry& b) {
  return a.id < b.id;
}

}  // namespace

TokenDist::TokenDist(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), ById);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!(e.prob > 0.0) || !std::isfinite(e.prob)) {
      throw std::invalid_argument("token probability must be positive: id " +
                                  std::to_string(e.id));
    }
    if (i > 0 && entries_[i - 1].id == e.id) {
      throw std::invalid_argument("duplicate token id in distribution: " +
                                  std::to_string(e.id));
    }
  }
}

TokenDist TokenDist::FromScores(std::vector<Entry> scores) {
  std::erase_if(scores, [](const Entry& e) { return e.prob <= 0.0; });
  if (scores.empty()) {
    throw std::logic_error("no positive scores to normalize");
  }
  std::sort(scores.begin(), scores.end(), ById);
  Renormalize(&scores);
  return TokenDist(std::move(scores));
}

double TokenDist::Prob(TokenId id) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{id, 0.0},
                             ById);
  return it != entries_.end() && it->id == id ? it->prob : 0.0;
}

bool TokenDist::Contains(TokenId id) const { return Prob(id) > 0.0; }

double TokenDist::Sum() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.prob;
  return s;
}

bool TokenDist::IsNormalized(double tol) const {
  return !entries_.empty() && std::abs(Sum() - 1.0) <= tol;
}

TokenDist TokenDist::Without(TokenId id) const {
  std::vector<Entry> kept;
  kept.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (e.id != id) kept.push_back(e);
  }
  if (kept.empty()) return TokenDist();
  Renormalize(&kept);
  return TokenDist(std::move(kept));
}

std::string TokenDist::SerializeBytes() const {
  std::string out(entries_.size() * (sizeof(TokenId) + sizeof(double)), '\0');
  char* p = out.data();
  for (const auto& e : entries_) {
    std::memcpy(p, &e.id, sizeof(TokenId));
    p += sizeof(TokenId);
    std::memcpy(p, &e.prob, sizeof(double));
    p += sizeof(double);
  }
  return out;
}

void Renormalize(std::vector<TokenDist::Entry>* entries) {
  double sum = 0.0;
  for (const auto& e : *entries) sum += e.prob;
  if (std::abs(sum - 1.0) <= kExactSumTolerance) return;
  for (auto& e : *entries) e.prob /= sum;
}

}  // namespace pairsum
