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

#include <random>
#include <set>

#include "pairsum/cache_lm.h"
#include "pairsum/model_io.h"
#include "pairsum/ngram_lm.h"
#include "pairsum/nucleus.h"
#include "pairsum/tokenizer.h"
#include "test_util.h"

namespace pairsum {
namespace {

using testing::Dist;
using testing::RandomDist;
using Words = std::vector<std::string>;

TEST(VocabularyTest, ReservedIdsArePresentAndDistinct) {
  Vocabulary v;
  EXPECT_EQ(v.size(), 3u);
  EXPECT_EQ(v.Lookup("<s>"), Vocabulary::kBos);
  EXPECT_EQ(v.Lookup("</s>"), Vocabulary::kEos);
  EXPECT_EQ(v.Lookup("<unk>"), Vocabulary::kUnk);
  EXPECT_EQ(v.Lookup("hotel"), Vocabulary::kUnk);
}

TEST(VocabularyTest, LookupInvertsTokenOf) {
  Vocabulary v;
  for (const char* w : {"pool", "spa", "pool", "view"}) v.Add(w);
  ASSERT_EQ(v.size(), 6u);
  for (TokenId i = 0; i < static_cast<TokenId>(v.size()); ++i) {
    EXPECT_EQ(v.Lookup(v.TokenOf(i)), i);
  }
  EXPECT_THROW(v.TokenOf(6), std::out_of_range);
  EXPECT_THROW(v.TokenOf(-1), std::out_of_range);
}

TEST(VocabularyTest, FromTokensRejectsBadLists) {
  EXPECT_THROW(Vocabulary::FromTokens({"a", "b", "c"}), std::invalid_argument);
  EXPECT_THROW(Vocabulary::FromTokens({"<s>", "</s>", "<unk>", "x", "x"}),
               std::invalid_argument);
  const auto v = Vocabulary::FromTokens({"<s>", "</s>", "<unk>", "x", "y"});
  EXPECT_EQ(v.Lookup("y"), 4);
}

TEST(TokenizerTest, SplitsWordsAndPunctuation) {
  EXPECT_EQ(SplitWords("The cat sat."), (Words{"the", "cat", "sat", "."}));
  EXPECT_EQ(SplitWords("don't  stop!!"),
            (Words{"don", "'", "t", "stop", "!", "!"}));
  EXPECT_TRUE(SplitWords("").empty());
  EXPECT_TRUE(SplitWords(" \t\n ").empty());
}

TEST(TokenizerTest, UnicodeCaseAndWhitespace) {
  EXPECT_EQ(SplitWords("Café café"), (Words{"café", "café"}));
  // U+00A0 no-break space and U+2003 em space separate words.
  EXPECT_EQ(SplitWords("a\xC2\xA0" "b\xE2\x80\x83" "c"), (Words{"a", "b", "c"}));
  // U+2014 em dash is punctuation.
  EXPECT_EQ(SplitWords("good\xE2\x80\x94great"),
            (Words{"good", "\xE2\x80\x94", "great"}));
  EXPECT_EQ(SplitWords("ΑΘΗΝΑ"), (Words{"αθηνα"}));
}

TEST(TokenizerTest, EncodeMapsUnknownsAndTrainingExtends) {
  Vocabulary v;
  const TokenSeq ids = TokenizeAndExtend("The cat sat.", &v);
  ASSERT_EQ(ids.size(), 4u);
  EXPECT_EQ(v.size(), 7u);
  EXPECT_EQ(Tokenize("the dog sat", v),
            (TokenSeq{ids[0], Vocabulary::kUnk, ids[2]}));
  const TokenSeq cafe = TokenizeAndExtend("Café café", &v);
  ASSERT_EQ(cafe.size(), 2u);
  EXPECT_EQ(cafe[0], cafe[1]);
  EXPECT_EQ(Detokenize({Vocabulary::kBos, ids[0], ids[1], Vocabulary::kEos}, v),
            "the cat");
}

TEST(TokenDistTest, ValidatesEntries) {
  EXPECT_THROW(Dist({{1, 0.5}, {1, 0.5}}), std::invalid_argument);
  EXPECT_THROW(Dist({{1, 0.0}}), std::invalid_argument);
  EXPECT_THROW(Dist({{1, -0.1}}), std::invalid_argument);
  const TokenDist d = Dist({{4, 0.25}, {2, 0.75}});
  EXPECT_EQ(d.entries().front().id, 2);
  EXPECT_DOUBLE_EQ(d.Prob(4), 0.25);
  EXPECT_EQ(d.Prob(3), 0.0);
  EXPECT_TRUE(d.IsNormalized());
}

TEST(TokenDistTest, FromScoresDropsZerosAndNormalizes) {
  const TokenDist d = TokenDist::FromScores({{3, 2.0}, {1, 0.0}, {2, 6.0}});
  EXPECT_EQ(d.size(), 2u);
  EXPECT_DOUBLE_EQ(d.Prob(2), 0.75);
  EXPECT_THROW(TokenDist::FromScores({{1, 0.0}}), std::logic_error);
}

TEST(TokenDistTest, WithoutRenormalizes) {
  const TokenDist d = Dist({{1, 0.5}, {5, 0.25}, {6, 0.25}}).Without(1);
  EXPECT_DOUBLE_EQ(d.Prob(5), 0.5);
  EXPECT_TRUE(Dist({{1, 1.0}}).Without(1).empty());
}

TEST(TopPTest, KeepsSmallestPrefixReachingMass) {
  // a=3, b=4, c=5, d=6; cumulative 0.5, 0.8, 0.95.
  const TokenDist d = Dist({{3, 0.5}, {4, 0.3}, {5, 0.15}, {6, 0.05}});
  const TokenDist t = TopPTruncate(d, 0.9);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_NEAR(t.Prob(3), 0.5 / 0.95, 1e-12);
  EXPECT_NEAR(t.Prob(4), 0.3 / 0.95, 1e-12);
  EXPECT_NEAR(t.Prob(5), 0.15 / 0.95, 1e-12);
  EXPECT_NEAR(t.Prob(3), 0.5263157894736842, 1e-12);
  EXPECT_FALSE(t.Contains(6));
}

TEST(TopPTest, FullMassAndOneHotAreUnchanged) {
  const TokenDist d = Dist({{3, 0.5}, {4, 0.3}, {5, 0.15}, {6, 0.05}});
  EXPECT_EQ(TopPTruncate(d, 1.0), d);
  const TokenDist one = Dist({{7, 1.0}});
  for (double p : {0.01, 0.5, 0.9, 1.0}) EXPECT_EQ(TopPTruncate(one, p), one);
}

TEST(TopPTest, ReachingMassExactlyStops) {
  // 0.6 + 0.3 is 0.8999999999999999 in binary.
  const TokenDist t = TopPTruncate(Dist({{1, 0.6}, {2, 0.3}, {3, 0.1}}), 0.9);
  EXPECT_EQ(t.size(), 2u);
}

TEST(TopPTest, TiesBrokenByAscendingId) {
  const TokenDist t = TopPTruncate(Dist({{9, 0.4}, {2, 0.4}, {5, 0.2}}), 0.3);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_TRUE(t.Contains(2));
}

TEST(TopPTest, RejectsBadMass) {
  const TokenDist d = Dist({{1, 1.0}});
  EXPECT_THROW(TopPTruncate(d, 0.0), std::invalid_argument);
  EXPECT_THROW(TopPTruncate(d, 1.5), std::invalid_argument);
}

TEST(TopPTest, PropertiesOnRandomDistributions) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> p_dist(0.05, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const TokenDist d = RandomDist(rng, 40);
    const double p = p_dist(rng);
    const TokenDist t = TopPTruncate(d, p);
    EXPECT_TRUE(t.IsNormalized());
    double kept_input_mass = 0.0;
    for (const auto& e : t.entries()) {
      ASSERT_TRUE(d.Contains(e.id));
      EXPECT_GE(e.prob, d.Prob(e.id));
      kept_input_mass += d.Prob(e.id);
      // Anything dropped is no more likely than anything kept.
    }
    for (const auto& e : d.entries()) {
      if (!t.Contains(e.id)) {
        for (const auto& k : t.entries()) EXPECT_LE(e.prob, d.Prob(k.id));
      }
    }
    EXPECT_GE(kept_input_mass, p - 1e-12);
    EXPECT_EQ(TopPTruncate(TopPTruncate(d, 1.0), 1.0), d);
  }
}

// "a b a b" with |V'| = 4 (</s> <unk> a b), eps = 0.5:
//   after a: b:2          -> p(b|a) = 2.5/4, others 0.5/4
//   after b: a:1, </s>:1  -> 1.5/4 each, others 0.5/4
//   after <s>: a:1        -> p(a|<s>) = 1.5/3, others 0.5/3
TEST(NGramLMTest, BigramSmoothedProbabilitiesMatchHandCounts) {
  Vocabulary v;
  const TokenSeq seq = TokenizeAndExtend("a b a b", &v);
  const TokenId a = seq[0], b = seq[1];
  const NGramLM lm = NGramLM::Train({seq}, 2, 0.5, v);
  const TokenId prefix_a[] = {a};
  const TokenDist after_a = lm.NextDist(prefix_a);
  EXPECT_NEAR(after_a.Prob(b), 0.625, 1e-12);
  EXPECT_NEAR(after_a.Prob(a), 0.125, 1e-12);
  EXPECT_NEAR(after_a.Prob(Vocabulary::kEos), 0.125, 1e-12);
  EXPECT_NEAR(after_a.Prob(Vocabulary::kUnk), 0.125, 1e-12);
  EXPECT_FALSE(after_a.Contains(Vocabulary::kBos));
  const TokenId prefix_b[] = {a, b};
  const TokenDist after_b = lm.NextDist(prefix_b);
  EXPECT_NEAR(after_b.Prob(a), 0.375, 1e-12);
  EXPECT_NEAR(after_b.Prob(Vocabulary::kEos), 0.375, 1e-12);
  const TokenDist start = lm.NextDist({});
  EXPECT_NEAR(start.Prob(a), 0.5, 1e-12);
  EXPECT_NEAR(start.Prob(b), 0.5 / 3.0, 1e-12);
}

TEST(NGramLMTest, VanishingEpsilonRecoversCountRatios) {
  Vocabulary v;
  const TokenSeq abab = TokenizeAndExtend("a b a b", &v);
  const NGramLM bigram = NGramLM::Train({abab}, 2, 1e-12, v);
  const TokenId prefix[] = {abab[0]};
  EXPECT_NEAR(bigram.NextDist(prefix).Prob(abab[1]), 1.0, 1e-9);

  Vocabulary u;
  const TokenSeq a = TokenizeAndExtend("a", &u);
  const NGramLM unigram = NGramLM::Train({a}, 1, 1e-12, u);
  const TokenDist d = unigram.NextDist({});
  EXPECT_NEAR(d.Prob(a[0]), 0.5, 1e-9);
  EXPECT_NEAR(d.Prob(Vocabulary::kEos), 0.5, 1e-9);
}

TEST(NGramLMTest, UnseenContextIsUniform) {
  Vocabulary v;
  const TokenSeq seq = TokenizeAndExtend("x y z", &v);
  const NGramLM lm = NGramLM::Train({seq}, 3, 1e-4, v);
  const TokenId prefix[] = {seq[2], seq[0]};  // "z x" never occurs
  const TokenDist d = lm.NextDist(prefix);
  ASSERT_EQ(d.size(), PredictiveSize(v));
  for (const auto& e : d.entries()) {
    EXPECT_DOUBLE_EQ(e.prob, 1.0 / static_cast<double>(PredictiveSize(v)));
  }
}

TEST(NGramLMTest, UnigramIgnoresPrefix) {
  Vocabulary v;
  const TokenSeq seq = TokenizeAndExtend("a b b c", &v);
  const NGramLM lm = NGramLM::Train({seq}, 1, 1e-3, v);
  const TokenId p1[] = {seq[0]};
  const TokenId p2[] = {seq[1], seq[3], seq[0]};
  EXPECT_EQ(lm.NextDist({}), lm.NextDist(p1));
  EXPECT_EQ(lm.NextDist({}), lm.NextDist(p2));
}

TEST(NGramLMTest, TrainingErrors) {
  Vocabulary v;
  const TokenSeq seq = TokenizeAndExtend("a", &v);
  try {
    NGramLM::Train({}, 2, 1e-4, v);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "empty training corpus");
  }
  EXPECT_THROW(NGramLM::Train({seq}, 0, 1e-4, v), std::invalid_argument);
  EXPECT_THROW(NGramLM::Train({seq}, 2, 0.0, v), std::invalid_argument);
  EXPECT_THROW(NGramLM::Train({{99}}, 2, 1e-4, v), std::invalid_argument);
}

TEST(NGramLMTest, RandomContextsAreNormalized) {
  std::mt19937_64 rng(3);
  Vocabulary v;
  std::vector<TokenSeq> corpus;
  std::uniform_int_distribution<int> word(0, 30), len(1, 20);
  for (int s = 0; s < 40; ++s) {
    std::string text;
    for (int i = len(rng); i > 0; --i) text += "w" + std::to_string(word(rng)) + " ";
    corpus.push_back(TokenizeAndExtend(text, &v));
  }
  const NGramLM lm = NGramLM::Train(corpus, 3, 1e-4, v);
  std::uniform_int_distribution<TokenId> id(1, static_cast<TokenId>(v.size()) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    TokenSeq prefix;
    for (int i = trial % 5; i > 0; --i) prefix.push_back(id(rng));
    EXPECT_TRUE(lm.NextDist(prefix).IsNormalized(1e-9));
  }
}

class CacheLMTest : public ::testing::Test {
 protected:
  void SetUp() override {
    for (const char* text : {"the pool was great", "the spa was great",
                             "the staff was rude", "breakfast was cold"}) {
      corpus_.push_back(TokenizeAndExtend(text, &vocab_));
    }
    set_a_ = {Tokenize("the pool was great", vocab_),
              Tokenize("the spa was great", vocab_)};
    set_b_ = {Tokenize("the staff was rude", vocab_),
              Tokenize("breakfast was cold", vocab_)};
  }

  NGramLM Background(int order = 3) const {
    return NGramLM::Train(corpus_, order, 1e-4, vocab_);
  }

  Vocabulary vocab_;
  std::vector<TokenSeq> corpus_;
  ReviewTokens set_a_, set_b_;
};

TEST_F(CacheLMTest, ZeroLambdaIsBackground) {
  const CacheInterpolatedLM lm(Background(), 0.0);
  const TokenSeq prefix = Tokenize("the", vocab_);
  EXPECT_EQ(lm.NextDist(prefix, Condition(set_a_)), Background().NextDist(prefix));
  EXPECT_EQ(lm.NextDist(prefix, Condition(set_a_)), lm.NextDist(prefix, Condition(set_b_)));
  EXPECT_EQ(lm.NextDist(prefix, Condition(set_a_, set_b_)),
            lm.NextDist(prefix, Condition(set_b_)));
}

TEST_F(CacheLMTest, FullLambdaStaysInsideConditionTokens) {
  Vocabulary v;
  const TokenSeq ab = TokenizeAndExtend("a b", &v);
  TokenizeAndExtend("c d e", &v);
  const NGramLM bg = NGramLM::Train({Tokenize("a b c d e", v)}, 1, 1e-4, v);
  const CacheInterpolatedLM lm(bg, 1.0, 1);
  const ReviewTokens cond = {ab};
  const TokenDist d = lm.NextDist({}, Condition(cond));
  const std::set<TokenId> allowed = {ab[0], ab[1], Vocabulary::kEos};
  for (const auto& e : d.entries()) EXPECT_TRUE(allowed.count(e.id));
  EXPECT_NEAR(d.Prob(ab[0]), 1.0 / 3.0, 1e-12);
}

TEST_F(CacheLMTest, InterpolatesCacheAndBackground) {
  const double lambda = 0.7;
  const NGramLM bg = Background();
  const CacheInterpolatedLM lm(bg, lambda);
  const TokenSeq prefix = Tokenize("the pool", vocab_);
  const TokenDist mixed = lm.NextDist(prefix, Condition(set_a_));
  // In set A, "the pool" is always followed by "was".
  const TokenId was = vocab_.Lookup("was");
  const double expected = lambda * 1.0 + (1 - lambda) * bg.NextDist(prefix).Prob(was);
  EXPECT_NEAR(mixed.Prob(was), expected, 1e-12);
  EXPECT_TRUE(mixed.IsNormalized());
}

TEST_F(CacheLMTest, CacheBacksOffToShorterContexts) {
  const ReviewCache cache(Condition(set_a_), 3);
  // "spa was" occurs, "pool spa" does not: back off to the bigram after
  // "spa", which is always "was".
  const TokenSeq prefix = Tokenize("pool spa", vocab_);
  const TokenDist d = cache.NextDist(prefix);
  EXPECT_EQ(d, Dist({{vocab_.Lookup("was"), 1.0}}));
  // Nothing matches "cold": fall back to unigrams over the condition.
  const TokenDist uni = cache.NextDist(Tokenize("cold", vocab_));
  EXPECT_NEAR(uni.Prob(vocab_.Lookup("the")), 2.0 / 10.0, 1e-12);
  EXPECT_NEAR(uni.Prob(Vocabulary::kEos), 2.0 / 10.0, 1e-12);
}

TEST_F(CacheLMTest, ConditionShorterThanOrderIsPadded) {
  const ReviewTokens tiny = {Tokenize("breakfast", vocab_)};
  const CacheInterpolatedLM lm(Background(), 0.7);
  const TokenDist d = lm.NextDist({}, Condition(tiny));
  EXPECT_TRUE(d.IsNormalized());
  EXPECT_GT(d.Prob(vocab_.Lookup("breakfast")), 0.7);
}

TEST_F(CacheLMTest, TwoSetConditioningIsOrderFree) {
  const CacheInterpolatedLM lm(Background(), 0.7);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<TokenId> id(1, static_cast<TokenId>(vocab_.size()) - 1);
  for (int trial = 0; trial < 100; ++trial) {
    TokenSeq prefix;
    for (int i = trial % 4; i > 0; --i) prefix.push_back(id(rng));
    const TokenDist ab = lm.NextDist(prefix, Condition(set_a_, set_b_));
    const TokenDist ba = lm.NextDist(prefix, Condition(set_b_, set_a_));
    EXPECT_EQ(ab.SerializeBytes(), ba.SerializeBytes());
    EXPECT_TRUE(ab.IsNormalized(1e-9));
  }
}

TEST_F(CacheLMTest, DeterministicBytes) {
  const CacheInterpolatedLM lm(Background(), 0.7);
  const TokenSeq prefix = Tokenize("the", vocab_);
  EXPECT_EQ(lm.NextDist(prefix, Condition(set_a_)).SerializeBytes(),
            lm.NextDist(prefix, Condition(set_a_)).SerializeBytes());
}

TEST_F(CacheLMTest, EmptyConditionIsAnError) {
  const CacheInterpolatedLM lm(Background(), 0.7);
  const ReviewTokens empty;
  try {
    lm.NextDist({}, Condition(empty));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "empty conditioning set");
  }
  EXPECT_THROW(lm.Bind(Condition(set_a_, empty)), std::invalid_argument);
  EXPECT_THROW(CacheInterpolatedLM(Background(), 1.5), std::invalid_argument);
}

TEST_F(CacheLMTest, ModelSerializationRoundTripsBytes) {
  const CacheInterpolatedLM lm(Background(), 0.7, 2);
  const std::string bytes = SerializeModel(lm);
  const CacheInterpolatedLM loaded = DeserializeModel(bytes);
  EXPECT_EQ(SerializeModel(loaded), bytes);
  EXPECT_EQ(loaded.cache_order(), 2);
  EXPECT_EQ(loaded.background().vocabulary(), vocab_);
  EXPECT_EQ(loaded.background().counts(), lm.background().counts());
  const TokenSeq prefix = Tokenize("the staff", vocab_);
  EXPECT_EQ(loaded.NextDist(prefix, Condition(set_b_)),
            lm.NextDist(prefix, Condition(set_b_)));
}

TEST_F(CacheLMTest, ModelDeserializationRejectsGarbage) {
  EXPECT_THROW(DeserializeModel("not json"), std::runtime_error);
  EXPECT_THROW(DeserializeModel("{}"), std::runtime_error);
  std::string bytes = SerializeModel(CacheInterpolatedLM(Background(), 0.7));
  const auto pos = bytes.find("\"version\":1");
  ASSERT_NE(pos, std::string::npos);
  bytes.replace(pos, 11, "\"version\":9");
  EXPECT_THROW(DeserializeModel(bytes), std::runtime_error);
}

}  // namespace
}  // namespace pairsum
