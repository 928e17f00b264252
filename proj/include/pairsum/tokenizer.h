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

#ifndef PAIRSUM_TOKENIZER_H_
#define PAIRSUM_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "pairsum/vocabulary.h"

namespace pairsum {

// Lowercases `text` and splits it on whitespace and punctuation boundaries.
// Every punctuation code point becomes its own token. Invalid UTF-8 bytes are
// passed through as single-byte word characters.
std::vector<std::string> SplitWords(std::string_view text);

// Maps words to ids; words outside the vocabulary become UNK.
TokenSeq Encode(const Vocabulary& vocab, const std::vector<std::string>& words);

// SplitWords followed by Encode.
TokenSeq Tokenize(std::string_view text, const Vocabulary& vocab);

// Training-mode tokenization: unseen words are appended to `vocab`.
TokenSeq TokenizeAndExtend(std::string_view text, Vocabulary* vocab);

// Space-joins the tokens, dropping BOS and EOS.
std::string Detokenize(const TokenSeq& tokens, const Vocabulary& vocab);

}  // namespace pairsum

#endif  // PAIRSUM_TOKENIZER_H_
