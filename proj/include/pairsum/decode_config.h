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

#ifndef PAIRSUM_DECODE_CONFIG_H_
#define PAIRSUM_DECODE_CONFIG_H_

#include <map>
#include <string>
#include <string_view>

namespace pairsum {

// Which aggregation rules drive contrastive and common decoding.
enum class DecodeMode {
  kContrastivePoE,         // ratio PoE for contrastive, MoE for common
  kContrastiveMoEAblation, // additive ratio for contrastive, MoE for common
  kContrastiveVsCommon,    // ratio against the common model, MoE for common
  kCommonMoE,              // same rules as kContrastivePoE
  kCommonPoEAblation,      // ratio PoE for contrastive, PoE for common
  kBase,                   // nucleus of the base models, no co-decoding
};

std::string_view DecodeModeName(DecodeMode mode);
// Throws std::invalid_argument for unknown names.
DecodeMode ParseDecodeMode(std::string_view name);

struct DecodeConfig {
  double delta = 1.0;
  double gamma = 0.5;
  double top_p = 0.9;
  int beam_width = 4;
  int max_len_contrastive = 150;
  int max_len_common = 50;
  int min_len = 10;
  double length_penalty = 1.0;
  DecodeMode mode = DecodeMode::kContrastivePoE;
  double ratio_floor = 1e-12;

  // Throws std::invalid_argument naming the first violated constraint.
  void Validate() const;

  // Applies `key = value` settings on top of the current values. Unknown keys
  // and unparsable values throw std::invalid_argument.
  void Apply(const std::map<std::string, std::string>& settings);

  // Every field as key -> canonical string, in the config file syntax.
  std::map<std::string, std::string> ToKeyValues() const;

  bool operator==(const DecodeConfig&) const = default;
};

// Parses a plain-text config: one `key = value` per line, `#` starts a
// comment, blank lines are ignored. Duplicate keys are an error.
std::map<std::string, std::string> ParseKeyValueText(std::string_view text);
std::map<std::string, std::string> ReadKeyValueFile(const std::string& path);

// Defaults, then the file at `path`, then validation.
DecodeConfig LoadDecodeConfig(const std::string& path);

}  // namespace pairsum

#endif  // PAIRSUM_DECODE_CONFIG_H_
