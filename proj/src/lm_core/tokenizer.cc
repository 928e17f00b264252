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

#include "pairsum/tokenizer.h"

#include <cstdint>

namespace pairsum {
namespace {

// Decodes one code point starting at `*pos` and advances it. Malformed
// sequences yield the lead byte as a code point in the private-use range so
// that they survive as word characters.
char32_t DecodeUtf8(std::string_view s, std::size_t* pos) {
  const auto b0 = static_cast<unsigned char>(s[*pos]);
  int extra = 0;
  char32_t cp = 0;
  if (b0 < 0x80) {
    ++*pos;
    return b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    ++*pos;
    return 0xF0000 + b0;
  }
  if (*pos + extra >= s.size()) {
    ++*pos;
    return 0xF0000 + b0;
  }
  for (int i = 1; i <= extra; ++i) {
    const auto b = static_cast<unsigned char>(s[*pos + i]);
    if ((b & 0xC0) != 0x80) {
      ++*pos;
      return 0xF0000 + b0;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  *pos += extra + 1;
  return cp;
}

void AppendUtf8(char32_t cp, std::string* out) {
  if (cp >= 0xF0000 && cp <= 0xF00FF) {
    out->push_back(static_cast<char>(cp - 0xF0000));
  } else if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Simple case folding for Latin, Greek and Cyrillic. Locale independent.
char32_t ToLower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp < 0x80) return cp;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  if (cp >= 0x100 && cp <= 0x137 && cp % 2 == 0) return cp + 1;
  if (cp >= 0x139 && cp <= 0x148 && cp % 2 == 1) return cp + 1;
  if (cp >= 0x14A && cp <= 0x177 && cp % 2 == 0) return cp + 1;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E && cp % 2 == 1) return cp + 1;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 32;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
  return cp;
}

bool IsSpace(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\v': case U'\f': case U'\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool IsPunct(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0xA1: case 0xA7: case 0xAB: case 0xB6: case 0xB7: case 0xBB:
    case 0xBF:
      return true;
    default:
      break;
  }
  return (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E) ||
         (cp >= 0x3001 && cp <= 0x3003) || (cp >= 0x3008 && cp <= 0x3011);
}

}  // namespace

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = DecodeUtf8(text, &pos);
    if (IsSpace(cp)) {
      flush();
    } else if (IsPunct(cp)) {
      flush();
      std::string p;
      AppendUtf8(cp, &p);
      words.push_back(std::move(p));
    } else {
      AppendUtf8(ToLower(cp), &current);
    }
  }
  flush();
  return words;
}

TokenSeq Encode(const Vocabulary& vocab,
                const std::vector<std::string>& words) {
  TokenSeq ids;
  ids.reserve(words.size());
  for (const auto& w : words) ids.push_back(vocab.Lookup(w));
  return ids;
}

TokenSeq Tokenize(std::string_view text, const Vocabulary& vocab) {
  return Encode(vocab, SplitWords(text));
}

TokenSeq TokenizeAndExtend(std::string_view text, Vocabulary* vocab) {
  TokenSeq ids;
  for (const auto& w : SplitWords(text)) ids.push_back(vocab->Add(w));
  return ids;
}

std::string Detokenize(const TokenSeq& tokens, const Vocabulary& vocab) {
  std::string out;
  for (TokenId id : tokens) {
    if (id == Vocabulary::kBos || id == Vocabulary::kEos) continue;
    if (!out.empty()) out.push_back(' ');
    out += vocab.TokenOf(id);
  }
  return out;
}

}  // namespace pairsum
