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

#include "pairsum/aggregate.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pairsum/nucleus.h"

namespace pairsum {
namespace {

void CheckNonNegative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be >= 0");
  }
}

void CheckFloor(double ratio_floor) {
  if (!(ratio_floor > 0.0)) {
    throw std::invalid_argument("ratio_floor must be > 0");
  }
}

// Truncated counterpart value if present, raw value otherwise, floored.
class FlooredLookup {
 public:
  FlooredLookup(const TokenDist& raw, double top_p, double floor)
      : raw_(raw), nucleus_(TopPTruncate(raw, top_p)), floor_(floor) {}

  double operator()(TokenId id) const {
    double v = nucleus_.Prob(id);
    if (v == 0.0) v = raw_.Prob(id);
    return std::max(v, floor_);
  }

 private:
  const TokenDist& raw_;
  TokenDist nucleus_;
  double floor_;
};

template <typename ScoreFn>
TokenDist ScoreNucleus(const TokenDist& nucleus, ScoreFn score) {
  if (nucleus.empty()) throw std::logic_error("empty candidate set");
  std::vector<TokenDist::Entry> scores;
  scores.reserve(nucleus.size());
  for (const auto& e : nucleus.entries()) {
    scores.push_back({e.id, score(e)});
  }
  return TokenDist::FromScores(std::move(scores));
}

}  // namespace

TokenDist AggregateContrastive(const TokenDist& target, const TokenDist& counter,
                               double delta, double top_p, double ratio_floor) {
  CheckNonNegative(delta, "delta");
  CheckFloor(ratio_floor);
  const TokenDist nucleus = TopPTruncate(target, top_p);
  const FlooredLookup counter_at(counter, top_p, ratio_floor);
  return ScoreNucleus(nucleus, [&](const TokenDist::Entry& e) {
    return e.prob * std::pow(e.prob / counter_at(e.id), delta);
  });
}

TokenDist AggregateContrastiveMoE(const TokenDist& target,
                                  const TokenDist& counter, double delta,
                                  double top_p, double ratio_floor) {
  CheckNonNegative(delta, "delta");
  CheckFloor(ratio_floor);
  const TokenDist nucleus = TopPTruncate(target, top_p);
  const FlooredLookup counter_at(counter, top_p, ratio_floor);
  return ScoreNucleus(nucleus, [&](const TokenDist::Entry& e) {
    return e.prob + delta * (e.prob / counter_at(e.id));
  });
}

TokenDist AggregateContrastiveVsCommon(const TokenDist& target,
                                       const TokenDist& common, double delta,
                                       double top_p, double ratio_floor) {
  return AggregateContrastive(target, common, delta, top_p, ratio_floor);
}

TokenDist AggregateCommon(const TokenDist& common, const TokenDist& a,
                          const TokenDist& b, double gamma, double top_p) {
  CheckNonNegative(gamma, "gamma");
  const TokenDist nc = TopPTruncate(common, top_p);
  const TokenDist na = TopPTruncate(a, top_p);
  const TokenDist nb = TopPTruncate(b, top_p);

  // Three-way merge over id-sorted supports.
  std::vector<TokenDist::Entry> scores;
  scores.reserve(nc.size() + na.size() + nb.size());
  auto ic = nc.entries().begin(), ec = nc.entries().end();
  auto ia = na.entries().begin(), ea = na.entries().end();
  auto ib = nb.entries().begin(), eb = nb.entries().end();
  while (ic != ec || ia != ea || ib != eb) {
    TokenId id = std::numeric_limits<TokenId>::max();
    if (ic != ec) id = std::min(id, ic->id);
    if (ia != ea) id = std::min(id, ia->id);
    if (ib != eb) id = std::min(id, ib->id);
    double pc = 0.0, pa = 0.0, pb = 0.0;
    if (ic != ec && ic->id == id) pc = (ic++)->prob;
    if (ia != ea && ia->id == id) pa = (ia++)->prob;
    if (ib != eb && ib->id == id) pb = (ib++)->prob;
    scores.push_back({id, pc + gamma * (pa + pb)});
  }
  return TokenDist::FromScores(std::move(scores));
}

TokenDist AggregateCommonPoE(const TokenDist& common, const TokenDist& a,
                             const TokenDist& b, double gamma, double top_p,
                             double ratio_floor) {
  CheckNonNegative(gamma, "gamma");
  CheckFloor(ratio_floor);
  const TokenDist nucleus = TopPTruncate(common, top_p);
  const FlooredLookup a_at(a, top_p, ratio_floor);
  const FlooredLookup b_at(b, top_p, ratio_floor);
  return ScoreNucleus(nucleus, [&](const TokenDist::Entry& e) {
    return e.prob * std::pow(a_at(e.id) * b_at(e.id), gamma);
  });
}

TokenDist MeanDist(const TokenDist& x, const TokenDist& y) {
  std::vector<TokenDist::Entry> mean;
  mean.reserve(x.size() + y.size());
  auto ix = x.entries().begin(), ex = x.entries().end();
  auto iy = y.entries().begin(), ey = y.entries().end();
  while (ix != ex || iy != ey) {
    if (iy == ey || (ix != ex && ix->id < iy->id)) {
      mean.push_back({ix->id, 0.5 * ix->prob});
      ++ix;
    } else if (ix == ex || iy->id < ix->id) {
      mean.push_back({iy->id, 0.5 * iy->prob});
      ++iy;
    } else {
      mean.push_back({ix->id, 0.5 * (ix->prob + iy->prob)});
      ++ix;
      ++iy;
    }
  }
  return TokenDist::FromScores(std::move(mean));
}

TokenDist SymmetricCommonDist(const BoundLM& ab, const BoundLM& ba,
                              std::span<const TokenId> prefix) {
  return MeanDist(ab.NextDist(prefix), ba.NextDist(prefix));
}

TokenDist SymmetricCommonDist(const ConditionalLM& lm,
                              std::span<const TokenId> prefix,
                              const ReviewTokens& a, const ReviewTokens& b) {
  const auto ab = lm.Bind(Condition(a, b));
  const auto ba = lm.Bind(Condition(b, a));
  return SymmetricCommonDist(*ab, *ba, prefix);
}

}  // namespace pairsum
