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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "pairsum/beam_search.h"
#include "test_util.h"

namespace pairsum {
namespace {

using testing::Dist;

constexpr TokenId kEos = Vocabulary::kEos;

// Toy LM whose distribution depends on the last token only.
class ToyLM {
 public:
  ToyLM(std::mt19937_64& rng, int content_tokens) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    for (TokenId last = 0; last < 3 + content_tokens; ++last) {
      std::vector<TokenDist::Entry> scores = {{kEos, u(rng)}};
      for (TokenId id = 3; id < 3 + content_tokens; ++id) scores.push_back({id, u(rng)});
      table_[last] = TokenDist::FromScores(std::move(scores));
    }
  }
  TokenDist operator()(std::span<const TokenId> prefix) const {
    return table_.at(prefix.empty() ? Vocabulary::kBos : prefix.back());
  }

 private:
  std::map<TokenId, TokenDist> table_;
};

struct Best {
  TokenSeq tokens;
  double score = -INFINITY;
  bool found = false;
};

void Consider(const TokenSeq& tokens, double logscore, double alpha, Best* best) {
  const double score = logscore / std::pow(static_cast<double>(tokens.size()), alpha);
  if (!best->found || score > best->score ||
      (score == best->score && tokens < best->tokens)) {
    *best = {tokens, score, true};
  }
}

// Enumerates every reachable sequence. Finished ones compete among
// themselves. Unfinished ones count only when they reach max_len.
void Enumerate(const ToyLM& lm, const BeamOptions& opt, TokenSeq* prefix,
               double logscore, Best* finished, Best* unfinished) {
  if (static_cast<int>(prefix->size()) == opt.max_len) {
    Consider(*prefix, logscore, opt.length_penalty, unfinished);
    return;
  }
  TokenDist dist = lm(*prefix);
  if (static_cast<int>(prefix->size()) < opt.min_len) {
    std::vector<TokenDist::Entry> kept;
    for (const auto& e : dist.entries()) {
      if (e.id != kEos) kept.push_back(e);
    }
    dist = TokenDist::FromScores(std::move(kept));
  }
  for (const auto& e : dist.entries()) {
    prefix->push_back(e.id);
    if (e.id == kEos) {
      Consider(*prefix, logscore + std::log(e.prob), opt.length_penalty, finished);
    } else {
      Enumerate(lm, opt, prefix, logscore + std::log(e.prob), finished, unfinished);
    }
    prefix->pop_back();
  }
}

TEST(BeamSearchTest, WideBeamMatchesExhaustiveSearch) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const ToyLM lm(rng, 2 + trial % 3);
    BeamOptions opt;
    opt.beam_width = 100000;
    opt.min_len = 1 + trial % 3;
    opt.max_len = 4 + trial % 2;
    opt.length_penalty = (trial % 4) * 0.5;
    Best finished, unfinished;
    TokenSeq prefix;
    Enumerate(lm, opt, &prefix, 0.0, &finished, &unfinished);
    const Hypothesis got = BeamSearch(std::cref(lm), opt);
    const Best& want = finished.found ? finished : unfinished;
    EXPECT_EQ(got.tokens, want.tokens) << "trial " << trial;
    EXPECT_EQ(got.finished, finished.found);
    EXPECT_NEAR(got.NormalizedScore(opt.length_penalty), want.score, 1e-12);
  }
}

TEST(BeamSearchTest, WidthOneIsGreedy) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const ToyLM lm(rng, 4);
    BeamOptions opt;
    opt.beam_width = 1;
    opt.min_len = 2;
    opt.max_len = 12;
    TokenSeq greedy;
    while (static_cast<int>(greedy.size()) < opt.max_len) {
      const TokenDist d = lm(greedy);
      TokenId arg = -1;
      double best = -1;
      for (const auto& e : d.entries()) {
        if (e.id == kEos && static_cast<int>(greedy.size()) < opt.min_len) continue;
        if (e.prob > best) {
          best = e.prob;
          arg = e.id;
        }
      }
      greedy.push_back(arg);
      if (arg == kEos) break;
    }
    EXPECT_EQ(BeamSearch(std::cref(lm), opt).tokens, greedy);
  }
}

TEST(BeamSearchTest, MinLengthMasksEos) {
  const StepFn eos_heavy = [](std::span<const TokenId>) {
    return Dist({{kEos, 0.99}, {3, 0.01}});
  };
  BeamOptions opt;
  opt.beam_width = 3;
  opt.min_len = 5;
  opt.max_len = 20;
  const Hypothesis h = BeamSearch(eos_heavy, opt);
  EXPECT_TRUE(h.finished);
  EXPECT_EQ(h.tokens, (TokenSeq{3, 3, 3, 3, 3, kEos}));
  EXPECT_EQ(BeamDecode(eos_heavy, opt), (TokenSeq{3, 3, 3, 3, 3}));
}

TEST(BeamSearchTest, MaxLengthWithoutEos) {
  const StepFn no_eos = [](std::span<const TokenId> p) {
    return p.size() % 2 ? Dist({{3, 0.7}, {4, 0.3}}) : Dist({{4, 0.6}, {5, 0.4}});
  };
  BeamOptions opt;
  opt.min_len = 1;
  opt.max_len = 6;
  const Hypothesis h = BeamSearch(no_eos, opt);
  EXPECT_FALSE(h.finished);
  EXPECT_EQ(h.tokens, (TokenSeq{4, 3, 4, 3, 4, 3}));
}

TEST(BeamSearchTest, TiesPreferSmallerSequence) {
  const StepFn flat = [](std::span<const TokenId> p) {
    return p.size() < 3 ? Dist({{3, 0.5}, {4, 0.5}}) : Dist({{kEos, 1.0}});
  };
  BeamOptions opt;
  opt.min_len = 3;
  opt.max_len = 10;
  EXPECT_EQ(BeamDecode(flat, opt), (TokenSeq{3, 3, 3}));
}

TEST(BeamSearchTest, EmptyDistributionThrows) {
  BeamOptions opt;
  opt.min_len = 2;
  const StepFn only_eos = [](std::span<const TokenId>) { return Dist({{kEos, 1.0}}); };
  EXPECT_THROW(BeamSearch(only_eos, opt), std::runtime_error);
  const StepFn empty = [](std::span<const TokenId>) { return TokenDist(); };
  EXPECT_THROW(BeamSearch(empty, opt), std::runtime_error);
}

TEST(BeamSearchTest, RejectsBadOptions) {
  const StepFn f = [](std::span<const TokenId>) { return Dist({{kEos, 1.0}}); };
  BeamOptions opt;
  opt.beam_width = 0;
  EXPECT_THROW(BeamSearch(f, opt), std::invalid_argument);
  opt.beam_width = 2;
  opt.min_len = 10;
  opt.max_len = 5;
  EXPECT_THROW(BeamSearch(f, opt), std::invalid_argument);
}

TEST(BeamSearchTest, LengthPenaltyFavorsLongerOutputs) {
  // EOS probability decays slowly: alpha 0 favors stopping early.
  const StepFn f = [](std::span<const TokenId> p) {
    return p.size() < 6 ? Dist({{kEos, 0.4}, {3, 0.6}}) : Dist({{kEos, 1.0}});
  };
  BeamOptions opt;
  opt.min_len = 1;
  opt.max_len = 10;
  opt.length_penalty = 0.0;
  EXPECT_EQ(BeamDecode(f, opt).size(), 1u);
  opt.length_penalty = 1.0;
  EXPECT_EQ(BeamDecode(f, opt).size(), 6u);
}

}  // namespace
}  // namespace pairsum
