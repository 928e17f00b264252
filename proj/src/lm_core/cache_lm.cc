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

#include "pairsum/cache_lm.h"

#include <stdexcept>
#include <utility>

namespace pairsum {

Condition Condition::Swapped() const {
  if (sets_.size() == 1) return *this;
  return Condition(sets_[1].get(), sets_[0].get());
}

ReviewCache::ReviewCache(const Condition& condition, int cache_order)
    : order_(cache_order), tables_(cache_order) {
  if (cache_order < 1) throw std::invalid_argument("cache order must be >= 1");
  TokenSeq history;
  for (std::size_t s = 0; s < condition.size(); ++s) {
    for (const auto& review : condition[s]) {
      // Short reviews are BOS-padded like the background model.
      history.assign(order_ - 1, Vocabulary::kBos);
      for (std::size_t i = 0; i <= review.size(); ++i) {
        const TokenId token = i < review.size() ? review[i] : Vocabulary::kEos;
        for (int m = 0; m < order_; ++m) {
          TokenSeq context(history.end() - m, history.end());
          tables_[m][std::move(context)].Add(token);
        }
        history.push_back(token);
      }
    }
  }
}

TokenDist ReviewCache::NextDist(std::span<const TokenId> prefix) const {
  TokenSeq history(order_ - 1, Vocabulary::kBos);
  history.insert(history.end(), prefix.begin(), prefix.end());
  for (int m = order_ - 1; m >= 0; --m) {
    TokenSeq context(history.end() - m, history.end());
    auto it = tables_[m].find(context);
    if (it == tables_[m].end() || it->second.total == 0) continue;
    const auto total = static_cast<double>(it->second.total);
    std::vector<TokenDist::Entry> entries;
    entries.reserve(it->second.next.size());
    for (const auto& [id, count] : it->second.next) {
      entries.push_back({id, static_cast<double>(count) / total});
    }
    Renormalize(&entries);
    return TokenDist(std::move(entries));
  }
  throw std::logic_error("review cache has no unigram statistics");
}

namespace {

class BoundCacheLM final : public BoundLM {
 public:
  BoundCacheLM(const CacheInterpolatedLM& lm, const Condition& condition)
      : lm_(lm), cache_(condition, lm.cache_order()) {}

  TokenDist NextDist(std::span<const TokenId> prefix) const override {
    const double lambda = lm_.lambda();
    if (lambda == 0.0) return lm_.background().NextDist(prefix);
    if (lambda == 1.0) return cache_.NextDist(prefix);

    const TokenDist background = lm_.background().NextDist(prefix);
    const TokenDist cache = cache_.NextDist(prefix);
    // Background support covers every predictable id, so merging by id walks
    // it once.
    std::vector<TokenDist::Entry> mixed;
    mixed.reserve(background.size());
    auto c = cache.entries().begin();
    const auto c_end = cache.entries().end();
    for (const auto& b : background.entries()) {
      double p = (1.0 - lambda) * b.prob;
      while (c != c_end && c->id < b.id) ++c;
      if (c != c_end && c->id == b.id) p += lambda * c->prob;
      mixed.push_back({b.id, p});
    }
    return TokenDist::FromScores(std::move(mixed));
  }

 private:
  const CacheInterpolatedLM& lm_;
  ReviewCache cache_;
};

}  // namespace

CacheInterpolatedLM::CacheInterpolatedLM(NGramLM background, double lambda,
                                         int cache_order)
    : background_(std::move(background)),
      lambda_(lambda),
      cache_order_(cache_order > 0 ? cache_order : background_.order()) {
  if (!(lambda_ >= 0.0 && lambda_ <= 1.0)) {
    throw std::invalid_argument("lambda must lie in [0, 1]");
  }
}

std::unique_ptr<const BoundLM> CacheInterpolatedLM::Bind(
    const Condition& condition) const {
  if (condition.size() == 0 || condition.size() > 2) {
    throw std::invalid_argument("condition must hold one or two review sets");
  }
  for (std::size_t i = 0; i < condition.size(); ++i) {
    if (condition[i].empty()) {
      throw std::invalid_argument("empty conditioning set");
    }
  }
  return std::make_unique<BoundCacheLM>(*this, condition);
}

}  // namespace pairsum
