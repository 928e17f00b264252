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

#ifndef PAIRSUM_DATASET_H_
#define PAIRSUM_DATASET_H_

#include <istream>
#include <string>
#include <vector>

#include "pairsum/conditional_lm.h"
#include "pairsum/vocabulary.h"

namespace pairsum {

struct Review {
  std::string entity_id;
  std::string review_id;
  std::string text;
  int length = 0;  // token count under SplitWords
};

struct EntityReviewSet {
  std::string entity_id;
  std::vector<Review> reviews;
};

// Validated review; throws std::invalid_argument for empty text or text
// without tokens.
Review MakeReview(std::string entity_id, std::string review_id, std::string text);

// Reads JSONL records {"entity_id", "review_id", "text"} and groups them by
// entity in first-appearance order, keeping input order within an entity.
// Blank lines are skipped. Malformed records and review ids repeated within
// an entity throw std::runtime_error("line N: ...").
std::vector<EntityReviewSet> ParseReviews(std::istream& in);
std::vector<EntityReviewSet> LoadReviews(const std::string& path);

// nullptr if absent.
const EntityReviewSet* FindEntity(const std::vector<EntityReviewSet>& corpus,
                                  const std::string& entity_id);

// Encodes every review of `set` with `vocab` (unknown words become UNK).
ReviewTokens EncodeReviews(const EntityReviewSet& set, const Vocabulary& vocab);

}  // namespace pairsum

#endif  // PAIRSUM_DATASET_H_
