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

#ifndef PAIRSUM_CLI_MANIFEST_H_
#define PAIRSUM_CLI_MANIFEST_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pairsum::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Record of one command run, written next to its outputs.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> config;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::optional<std::string> model_fingerprint;
  std::optional<std::string> seed;

  // JSON with a creation timestamp; the timestamp is the only field that
  // differs between identical runs.
  std::string ToJson() const;
};

// Hex SHA-256 of `bytes`.
std::string Fingerprint(const std::string& bytes);

// `<output>.manifest.json`.
std::string ManifestPathFor(const std::string& output);

// Writes `contents` to a temporary sibling and renames it over `path`.
void WriteFileAtomic(const std::string& path, const std::string& contents);

std::string ReadFile(const std::string& path);

}  // namespace pairsum::cli

#endif  // PAIRSUM_CLI_MANIFEST_H_
