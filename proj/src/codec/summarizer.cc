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

#include "pairsum/summarizer.h"

#include <stdexcept>

#include "pairsum/aggregate.h"
#include "pairsum/nucleus.h"
#include "pairsum/tokenizer.h"

namespace pairsum {

PairDecoder::PairDecoder(const SummarizerModels& models, const ReviewTokens& a,
                         const ReviewTokens& b, const DecodeConfig& config)
    : config_(config) {
  config_.Validate();
  cont_a_ = models.contrastive.Bind(Condition(a));
  cont_b_ = models.contrastive.Bind(Condition(b));
  comm_ab_ = models.common.Bind(Condition(a, b));
  comm_ba_ = models.common.Bind(Condition(b, a));
}

TokenDist PairDecoder::ContrastiveStep(Side side,
                                       std::span<const TokenId> prefix) const {
  const Side other = side == Side::kA ? Side::kB : Side::kA;
  const TokenDist target = Cont(side).NextDist(prefix);
  const auto& c = config_;
  switch (c.mode) {
    case DecodeMode::kBase:
      return TopPTruncate(target, c.top_p);
    case DecodeMode::kContrastiveMoEAblation:
      return AggregateContrastiveMoE(target, Cont(other).NextDist(prefix),
                                     c.delta, c.top_p, c.ratio_floor);
    case DecodeMode::kContrastiveVsCommon:
      return AggregateContrastiveVsCommon(
          target, SymmetricCommonDist(*comm_ab_, *comm_ba_, prefix), c.delta,
          c.top_p, c.ratio_floor);
    case DecodeMode::kContrastivePoE:
    case DecodeMode::kCommonMoE:
    case DecodeMode::kCommonPoEAblation:
      return AggregateContrastive(target, Cont(other).NextDist(prefix), c.delta,
                                  c.top_p, c.ratio_floor);
  }
  throw std::logic_error("unhandled decode mode");
}

TokenDist PairDecoder::CommonStep(std::span<const TokenId> prefix) const {
  const TokenDist common = SymmetricCommonDist(*comm_ab_, *comm_ba_, prefix);
  const auto& c = config_;
  if (c.mode == DecodeMode::kBase) return TopPTruncate(common, c.top_p);
  const TokenDist pa = cont_a_->NextDist(prefix);
  const TokenDist pb = cont_b_->NextDist(prefix);
  if (c.mode == DecodeMode::kCommonPoEAblation) {
    return AggregateCommonPoE(common, pa, pb, c.gamma, c.top_p, c.ratio_floor);
  }
  return AggregateCommon(common, pa, pb, c.gamma, c.top_p);
}

TokenSeq PairDecoder::DecodeContrastive(Side side) const {
  BeamOptions opts{config_.beam_width, config_.min_len,
                   config_.max_len_contrastive, config_.length_penalty};
  return BeamDecode(
      [this, side](std::span<const TokenId> p) { return ContrastiveStep(side, p); },
      opts);
}

TokenSeq PairDecoder::DecodeCommon() const {
  BeamOptions opts{config_.beam_width, config_.min_len, config_.max_len_common,
                   config_.length_penalty};
  return BeamDecode([this](std::span<const TokenId> p) { return CommonStep(p); },
                    opts);
}

SummaryTriple SummarizePair(const SummarizerModels& models,
                            const Vocabulary& vocab,
                            const std::string& entity_a,
                            const ReviewTokens& a,
                            const std::string& entity_b,
                            const ReviewTokens& b,
                            const DecodeConfig& config) {
  const PairDecoder decoder(models, a, b, config);
  SummaryTriple out;
  out.pair_id = entity_a + "," + entity_b;
  out.entity_a = entity_a;
  out.entity_b = entity_b;
  out.contrastive_a = Detokenize(decoder.DecodeContrastive(Side::kA), vocab);
  out.contrastive_b = Detokenize(decoder.DecodeContrastive(Side::kB), vocab);
  out.common = Detokenize(decoder.DecodeCommon(), vocab);
  return out;
}

}  // namespace pairsum
