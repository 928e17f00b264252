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

#ifndef PAIRSUM_SUMMARIZER_H_
#define PAIRSUM_SUMMARIZER_H_

#include <memory>
#include <span>
#include <string>

#include "pairsum/beam_search.h"
#include "pairsum/conditional_lm.h"
#include "pairsum/decode_config.h"
#include "pairsum/vocabulary.h"

namespace pairsum {

// The two base models. The contrastive model is conditioned on one entity's
// reviews, the common model on an ordered pair of review sets. Both may be
// the same object.
struct SummarizerModels {
  const ConditionalLM& contrastive;
  const ConditionalLM& common;
};

struct SummaryTriple {
  std::string pair_id;
  std::string entity_a;
  std::string entity_b;
  std::string contrastive_a;  // opinions of A not shared with B
  std::string contrastive_b;  // opinions of B not shared with A
  std::string common;         // opinions shared by A and B

  bool operator==(const SummaryTriple&) const = default;
};

enum class Side { kA, kB };

// Per-step co-decoded distributions for one entity pair. Holds the bound
// models, so `a` and `b` must outlive it.
class PairDecoder {
 public:
  PairDecoder(const SummarizerModels& models, const ReviewTokens& a,
              const ReviewTokens& b, const DecodeConfig& config);

  // Side kA targets A against B; kB swaps the roles.
  TokenDist ContrastiveStep(Side side, std::span<const TokenId> prefix) const;
  TokenDist CommonStep(std::span<const TokenId> prefix) const;

  TokenSeq DecodeContrastive(Side side) const;
  TokenSeq DecodeCommon() const;

  const DecodeConfig& config() const { return config_; }

 private:
  const BoundLM& Cont(Side side) const { return side == Side::kA ? *cont_a_ : *cont_b_; }

  DecodeConfig config_;
  std::unique_ptr<const BoundLM> cont_a_;
  std::unique_ptr<const BoundLM> cont_b_;
  std::unique_ptr<const BoundLM> comm_ab_;
  std::unique_ptr<const BoundLM> comm_ba_;
};

// Decodes both contrastive summaries and the common summary for (A, B).
// Throws std::invalid_argument("empty conditioning set") for an empty
// review set.
SummaryTriple SummarizePair(const SummarizerModels& models,
                            const Vocabulary& vocab,
                            const std::string& entity_a,
                            const ReviewTokens& a,
                            const std::string& entity_b,
                            const ReviewTokens& b,
                            const DecodeConfig& config);

}  // namespace pairsum

#endif  // PAIRSUM_SUMMARIZER_H_
