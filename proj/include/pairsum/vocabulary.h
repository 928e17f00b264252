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

#ifndef PAIRSUM_VOCABULARY_H_
#define PAIRSUM_VOCABULARY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pairsum {

using TokenId = std::int32_t;
using TokenSeq = std::vector<TokenId>;

// Dense, 0-based token universe. The three reserved tokens always occupy
// ids 0..2 in the order BOS, EOS, UNK.
class Vocabulary {
 public:
  static constexpr TokenId kBos = 0;
  static constexpr TokenId kEos = 1;
  static constexpr TokenId kUnk = 2;
  static constexpr std::string_view kBosToken = "<s>";
  static constexpr std::string_view kEosToken = "</s>";
  static constexpr std::string_view kUnkToken = "<unk>";

  Vocabulary();

  // Rebuilds a vocabulary from a token list; the first three entries must be
  // the reserved tokens. Throws std::invalid_argument on duplicates.
  static Vocabulary FromTokens(std::vector<std::string> tokens);

  // Returns the id of `token`, inserting it if absent.
  TokenId Add(std::string_view token);

  // Returns kUnk for tokens not in the vocabulary.
  TokenId Lookup(std::string_view token) const;
  bool Contains(std::string_view token) const;

  // Throws std::out_of_range for invalid ids.
  const std::string& TokenOf(TokenId id) const;

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  bool operator==(const Vocabulary& other) const {
    return tokens_ == other.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> ids_;
};

}  // namespace pairsum

#endif  // PAIRSUM_VOCABULARY_H_
