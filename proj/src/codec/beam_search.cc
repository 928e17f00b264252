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

#include "pairsum/beam_search.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pairsum {

double Hypothesis::NormalizedScore(double length_penalty) const {
  if (tokens.empty()) return logscore;
  return logscore / std::pow(static_cast<double>(tokens.size()), length_penalty);
}

bool BetterHypothesis(const Hypothesis& a, const Hypothesis& b,
                      double length_penalty) {
  const double sa = a.NormalizedScore(length_penalty);
  const double sb = b.NormalizedScore(length_penalty);
  if (sa != sb) return sa > sb;
  return a.tokens < b.tokens;
}

Hypothesis BeamSearch(const StepFn& step_fn, const BeamOptions& options) {
  if (options.beam_width < 1) {
    throw std::invalid_argument("beam_width must be >= 1");
  }
  if (options.min_len < 1 || options.max_len < options.min_len) {
    throw std::invalid_argument("require 1 <= min_len <= max_len");
  }
  const double alpha = options.length_penalty;
  auto better = [alpha](const Hypothesis& a, const Hypothesis& b) {
    return BetterHypothesis(a, b, alpha);
  };

  std::vector<Hypothesis> beam(1);
  for (int step = 0; step < options.max_len; ++step) {
    std::vector<Hypothesis> candidates;
    for (const auto& hyp : beam) {
      if (hyp.finished) {
        candidates.push_back(hyp);
        continue;
      }
      TokenDist dist = step_fn(hyp.tokens);
      if (static_cast<int>(hyp.tokens.size()) < options.min_len) {
        dist = dist.Without(Vocabulary::kEos);
      }
      if (dist.empty()) throw std::runtime_error("empty step distribution");
      for (const auto& e : dist.entries()) {
        Hypothesis ext;
        ext.tokens.reserve(hyp.tokens.size() + 1);
        ext.tokens = hyp.tokens;
        ext.tokens.push_back(e.id);
        ext.logscore = hyp.logscore + std::log(e.prob);
        ext.finished = e.id == Vocabulary::kEos;
        candidates.push_back(std::move(ext));
      }
    }
    const auto keep =
        std::min<std::size_t>(options.beam_width, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + keep,
                      candidates.end(), better);
    candidates.resize(keep);
    beam = std::move(candidates);
    if (std::all_of(beam.begin(), beam.end(),
                    [](const Hypothesis& h) { return h.finished; })) {
      break;
    }
  }

  const Hypothesis* best = nullptr;
  for (const auto& hyp : beam) {
    if (hyp.finished && (!best || better(hyp, *best))) best = &hyp;
  }
  if (!best) {
    for (const auto& hyp : beam) {
      if (!best || better(hyp, *best)) best = &hyp;
    }
  }
  return *best;
}

TokenSeq BeamDecode(const StepFn& step_fn, const BeamOptions& options) {
  TokenSeq tokens = BeamSearch(step_fn, options).tokens;
  if (!tokens.empty() && tokens.back() == Vocabulary::kEos) tokens.pop_back();
  return tokens;
}

}  // namespace pairsum
