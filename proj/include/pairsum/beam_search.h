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

#ifndef PAIRSUM_BEAM_SEARCH_H_
#define PAIRSUM_BEAM_SEARCH_H_

#include <functional>
#include <span>
#include <vector>

#include "pairsum/token_dist.h"
#include "pairsum/vocabulary.h"

namespace pairsum {

// Next-token distribution for a prefix of generated tokens (without BOS).
using StepFn = std::function<TokenDist(std::span<const TokenId>)>;

struct BeamOptions {
  int beam_width = 4;
  int min_len = 10;
  int max_len = 150;
  double length_penalty = 1.0;
};

struct Hypothesis {
  TokenSeq tokens;  // includes the final EOS when finished
  double logscore = 0.0;
  bool finished = false;

  // Length-normalized score logscore / len^alpha, len counting EOS.
  double NormalizedScore(double length_penalty) const;
};

// Strict ranking used everywhere in decoding: higher normalized score first,
// then lexicographically smaller token sequence.
bool BetterHypothesis(const Hypothesis& a, const Hypothesis& b,
                      double length_penalty);

// Beam search from BOS. EOS is removed (and the step distribution
// renormalized) while fewer than min_len content tokens exist. Finished
// hypotheses stay in the beam unchanged. Decoding stops when the beam holds
// only finished hypotheses or after max_len steps. Returns the best finished
// hypothesis, or the best unfinished one if none finished.
// Throws std::runtime_error("empty step distribution") when step_fn yields
// no usable candidates.
Hypothesis BeamSearch(const StepFn& step_fn, const BeamOptions& options);

// Content tokens of BeamSearch's result (EOS stripped).
TokenSeq BeamDecode(const StepFn& step_fn, const BeamOptions& options);

}  // namespace pairsum

#endif  // PAIRSUM_BEAM_SEARCH_H_
