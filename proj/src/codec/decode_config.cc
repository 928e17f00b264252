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

#include "pairsum/decode_config.h"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pairsum {
namespace {

constexpr std::array<std::pair<DecodeMode, std::string_view>, 6> kModeNames = {{
    {DecodeMode::kContrastivePoE, "contrastive_poe"},
    {DecodeMode::kContrastiveMoEAblation, "contrastive_moe_ablation"},
    {DecodeMode::kContrastiveVsCommon, "contrastive_vs_common"},
    {DecodeMode::kCommonMoE, "common_moe"},
    {DecodeMode::kCommonPoEAblation, "common_poe_ablation"},
    {DecodeMode::kBase, "base"},
}};

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ParseDouble(const std::string& key, const std::string& value) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw std::invalid_argument("config key '" + key + "': not a number: " + value);
  }
  return out;
}

int ParseInt(const std::string& key, const std::string& value) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw std::invalid_argument("config key '" + key + "': not an integer: " + value);
  }
  return out;
}

std::string FormatDouble(double v) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace

std::string_view DecodeModeName(DecodeMode mode) {
  for (const auto& [m, name] : kModeNames) {
    if (m == mode) return name;
  }
  throw std::logic_error("unhandled decode mode");
}

DecodeMode ParseDecodeMode(std::string_view name) {
  for (const auto& [m, n] : kModeNames) {
    if (n == name) return m;
  }
  throw std::invalid_argument("unknown decode mode: " + std::string(name));
}

void DecodeConfig::Validate() const {
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be >= 0");
  if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
  if (!(top_p > 0.0 && top_p <= 1.0)) {
    throw std::invalid_argument("top_p must lie in (0, 1]");
  }
  if (beam_width < 1) throw std::invalid_argument("beam_width must be >= 1");
  if (min_len < 1) throw std::invalid_argument("min_len must be >= 1");
  if (max_len_contrastive < min_len || max_len_common < min_len) {
    throw std::invalid_argument("max_len must be >= min_len");
  }
  if (!(length_penalty >= 0.0)) {
    throw std::invalid_argument("length_penalty must be >= 0");
  }
  if (!(ratio_floor > 0.0)) throw std::invalid_argument("ratio_floor must be > 0");
}

void DecodeConfig::Apply(const std::map<std::string, std::string>& settings) {
  for (const auto& [key, value] : settings) {
    if (key == "delta") {
      delta = ParseDouble(key, value);
    } else if (key == "gamma") {
      gamma = ParseDouble(key, value);
    } else if (key == "top_p") {
      top_p = ParseDouble(key, value);
    } else if (key == "beam_width") {
      beam_width = ParseInt(key, value);
    } else if (key == "max_len_contrastive") {
      max_len_contrastive = ParseInt(key, value);
    } else if (key == "max_len_common") {
      max_len_common = ParseInt(key, value);
    } else if (key == "min_len") {
      min_len = ParseInt(key, value);
    } else if (key == "length_penalty") {
      length_penalty = ParseDouble(key, value);
    } else if (key == "mode") {
      mode = ParseDecodeMode(value);
    } else if (key == "ratio_floor") {
      ratio_floor = ParseDouble(key, value);
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
}

std::map<std::string, std::string> DecodeConfig::ToKeyValues() const {
  return {
      {"delta", FormatDouble(delta)},
      {"gamma", FormatDouble(gamma)},
      {"top_p", FormatDouble(top_p)},
      {"beam_width", std::to_string(beam_width)},
      {"max_len_contrastive", std::to_string(max_len_contrastive)},
      {"max_len_common", std::to_string(max_len_common)},
      {"min_len", std::to_string(min_len)},
      {"length_penalty", FormatDouble(length_penalty)},
      {"mode", std::string(DecodeModeName(mode))},
      {"ratio_floor", FormatDouble(ratio_floor)},
  };
}

std::map<std::string, std::string> ParseKeyValueText(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    std::string key(Trim(line.substr(0, eq)));
    std::string value(Trim(line.substr(eq + 1)));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": empty key");
    }
    if (!out.emplace(key, value).second) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": duplicate key " + key);
    }
  }
  return out;
}

std::map<std::string, std::string> ReadKeyValueFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseKeyValueText(buf.str());
}

DecodeConfig LoadDecodeConfig(const std::string& path) {
  DecodeConfig cfg;
  cfg.Apply(ReadKeyValueFile(path));
  cfg.Validate();
  return cfg;
}

}  // namespace pairsum
