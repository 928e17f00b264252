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

#include "pairsum/synthetic.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "json.hpp"
#include "pairsum/tfidf.h"
#include "pairsum/tokenizer.h"

namespace pairsum {

std::string_view SyntheticTaskName(SyntheticTask task) {
  return task == SyntheticTask::kContrastive ? "contrastive" : "common";
}

SyntheticTask ParseSyntheticTask(std::string_view name) {
  if (name == "contrastive") return SyntheticTask::kContrastive;
  if (name == "common") return SyntheticTask::kCommon;
  throw std::invalid_argument("unknown task: " + std::string(name));
}

LengthWindow SummaryWindow(SyntheticTask task) {
  return task == SyntheticTask::kContrastive ? kContrastiveSummaryWindow
                                             : kCommonSummaryWindow;
}

namespace {

struct Scored {
  std::size_t index;
  double sim;
};

auto PairKey(const SyntheticPair& p) {
  return std::tie(p.pseudo_summary.entity_id, p.pseudo_summary.review_id);
}

}  // namespace

SyntheticResult BuildSynthetic(const std::vector<EntityReviewSet>& corpus,
                               SyntheticTask task, int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 1) throw std::invalid_argument("K must be >= 1");

  std::vector<Words> docs;
  for (const auto& set : corpus) {
    for (const auto& r : set.reviews) docs.push_back(SplitWords(r.text));
  }
  const TfidfModel tfidf(docs);
  std::vector<TermVector> vectors;
  vectors.reserve(docs.size());
  for (const auto& d : docs) vectors.push_back(tfidf.Vectorize(d));

  const LengthWindow summary_window = SummaryWindow(task);
  SyntheticResult result;
  std::vector<std::size_t> summary_vector;  // parallel to result.pairs

  std::size_t base = 0;
  for (const auto& set : corpus) {
    const auto& reviews = set.reviews;
    for (std::size_t i = 0; i < reviews.size(); ++i) {
      const Review& r = reviews[i];
      if (!summary_window.Contains(r.length)) continue;
      std::vector<Scored> candidates;
      for (std::size_t j = 0; j < reviews.size(); ++j) {
        if (j == i || !kInputReviewWindow.Contains(reviews[j].length)) continue;
        candidates.push_back({j, Cosine(vectors[base + i], vectors[base + j])});
      }
      if (static_cast<int>(candidates.size()) < n) {
        result.skipped.push_back(
            {r.entity_id, r.review_id,
             "only " + std::to_string(candidates.size()) +
                 " eligible input reviews (need " + std::to_string(n) + ")"});
        continue;
      }
      // The objective is a sum of per-review similarities, so the best
      // n-subset is the n individually most similar reviews.
      std::sort(candidates.begin(), candidates.end(),
                [&](const Scored& a, const Scored& b) {
                  if (a.sim != b.sim) return a.sim > b.sim;
                  return reviews[a.index].review_id < reviews[b.index].review_id;
                });
      SyntheticPair pair{task, r, {}, 0.0, std::nullopt};
      for (int m = 0; m < n; ++m) {
        pair.inputs.push_back(reviews[candidates[m].index]);
        pair.similarity_sum += candidates[m].sim;
      }
      result.pairs.push_back(std::move(pair));
      summary_vector.push_back(base + i);
    }
    base += reviews.size();
  }

  std::vector<std::size_t> order(result.pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& pa = result.pairs[a];
    const auto& pb = result.pairs[b];
    if (pa.similarity_sum != pb.similarity_sum) {
      return pa.similarity_sum > pb.similarity_sum;
    }
    return PairKey(pa) < PairKey(pb);
  });
  if (order.size() > static_cast<std::size_t>(k)) order.resize(k);
  result.short_of_k = order.size() < static_cast<std::size_t>(k);

  std::vector<SyntheticPair> kept;
  std::vector<std::size_t> kept_vector;
  for (std::size_t idx : order) {
    kept.push_back(std::move(result.pairs[idx]));
    kept_vector.push_back(summary_vector[idx]);
  }

  if (task == SyntheticTask::kCommon) {
    std::vector<SyntheticPair> joined;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::optional<std::size_t> best;
      double best_sim = 0.0;
      for (std::size_t j = 0; j < kept.size(); ++j) {
        if (j == i || kept[j].pseudo_summary.entity_id ==
                          kept[i].pseudo_summary.entity_id) {
          continue;
        }
        const double sim = Cosine(vectors[kept_vector[i]], vectors[kept_vector[j]]);
        if (!best || sim > best_sim ||
            (sim == best_sim && PairKey(kept[j]) < PairKey(kept[*best]))) {
          best = j;
          best_sim = sim;
        }
      }
      if (!best) {
        result.skipped.push_back({kept[i].pseudo_summary.entity_id,
                                  kept[i].pseudo_summary.review_id,
                                  "no counterpart pair from another entity"});
        continue;
      }
      SyntheticPair p = kept[i];
      const auto& cp = kept[*best];
      p.counterpart = Counterpart{cp.pseudo_summary.entity_id,
                                  cp.pseudo_summary.review_id, cp.inputs};
      joined.push_back(std::move(p));
    }
    kept = std::move(joined);
    result.short_of_k = kept.size() < static_cast<std::size_t>(k);
  }
  result.pairs = std::move(kept);
  return result;
}

std::string SyntheticPairJson(const SyntheticPair& pair) {
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& r : pair.inputs) inputs.push_back(r.review_id);
  nlohmann::json counterpart = nullptr;
  if (pair.counterpart) {
    counterpart = nlohmann::json::array();
    for (const auto& r : pair.counterpart->inputs) counterpart.push_back(r.review_id);
  }
  nlohmann::json doc = {
      {"task", SyntheticTaskName(pair.task)},
      {"summary_review_id", pair.pseudo_summary.review_id},
      {"input_review_ids", std::move(inputs)},
      {"counterpart_review_ids", std::move(counterpart)},
      {"similarity_sum", pair.similarity_sum},
  };
  return doc.dump();
}

}  // namespace pairsum
