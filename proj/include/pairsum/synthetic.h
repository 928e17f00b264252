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

#ifndef PAIRSUM_SYNTHETIC_H_
#define PAIRSUM_SYNTHETIC_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairsum/dataset.h"

namespace pairsum {

enum class SyntheticTask { kContrastive, kCommon };

std::string_view SyntheticTaskName(SyntheticTask task);
SyntheticTask ParseSyntheticTask(std::string_view name);

// Inclusive token-length window.
struct LengthWindow {
  int min;
  int max;
  bool Contains(int length) const { return length >= min && length <= max; }
};

inline constexpr LengthWindow kInputReviewWindow{50, 150};
inline constexpr LengthWindow kContrastiveSummaryWindow{100, 150};
inline constexpr LengthWindow kCommonSummaryWindow{15, 50};

LengthWindow SummaryWindow(SyntheticTask task);

// Another kept pair of a different entity attached to a common-task pair.
struct Counterpart {
  std::string entity_id;
  std::string summary_review_id;
  std::vector<Review> inputs;
};

struct SyntheticPair {
  SyntheticTask task;
  Review pseudo_summary;
  std::vector<Review> inputs;  // most similar first
  double similarity_sum = 0.0;
  std::optional<Counterpart> counterpart;  // set for the common task only
};

struct SkipRecord {
  std::string entity_id;
  std::string review_id;
  std::string reason;
};

struct SyntheticResult {
  std::vector<SyntheticPair> pairs;
  std::vector<SkipRecord> skipped;
  // Fewer than K pairs could be produced.
  bool short_of_k = false;
};

// Builds self-supervised (inputs, pseudo-summary) pairs. For every review r
// whose length fits the task's summary window, the n most similar other
// reviews of the same entity with length in [50, 150] become the inputs;
// reviews without n such candidates are skipped. The K pairs with the highest
// similarity sums are kept, ordered by descending sum, ties by
// (entity_id, review_id). For the common task each kept pair is then joined
// with the kept pair of another entity whose pseudo-summary is most similar
// to its own; pairs without one are dropped into `skipped`.
// Similarity is TF-IDF cosine with document frequencies over all reviews.
// Throws std::invalid_argument unless n >= 1 and K >= 1.
SyntheticResult BuildSynthetic(const std::vector<EntityReviewSet>& corpus,
                               SyntheticTask task, int n, int k);

// One JSONL record: task, summary_review_id, input_review_ids,
// counterpart_review_ids (null for contrastive) and similarity_sum.
std::string SyntheticPairJson(const SyntheticPair& pair);

}  // namespace pairsum

#endif  // PAIRSUM_SYNTHETIC_H_
