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

#include "pairsum/vocabulary.h"

#include <stdexcept>
#include <utility>

namespace pairsum {

Vocabulary::Vocabulary() {
  Add(kBosToken);
  Add(kEosToken);
  Add(kUnkToken);
}

Vocabulary Vocabulary::FromTokens(std::vector<std::string> tokens) {
  if (tokens.size() < 3 || tokens[kBos] != kBosToken ||
      tokens[kEos] != kEosToken || tokens[kUnk] != kUnkToken) {
    throw std::invalid_argument("vocabulary must start with <s> </s> <unk>");
  }
  Vocabulary vocab;
  for (std::size_t i = 3; i < tokens.size(); ++i) {
    if (vocab.Contains(tokens[i])) {
      throw std::invalid_argument("duplicate vocabulary token: " + tokens[i]);
    }
    vocab.Add(tokens[i]);
  }
  return vocab;
}

TokenId Vocabulary::Add(std::string_view token) {
  auto it = ids_.find(std::string(token));
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<TokenId>(tokens_.size());
  tokens_.emplace_back(token);
  ids_.emplace(tokens_.back(), id);
  return id;
}

TokenId Vocabulary::Lookup(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  return it == ids_.end() ? kUnk : it->second;
}

bool Vocabulary::Contains(std::string_view token) const {
  return ids_.count(std::string(token)) > 0;
}

const std::string& Vocabulary::TokenOf(TokenId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= tokens_.size()) {
    throw std::out_of_range("token id out of range: " + std::to_string(id));
  }
  return tokens_[id];
}

}  // namespace pairsum
