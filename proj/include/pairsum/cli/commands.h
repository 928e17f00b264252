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

#ifndef PAIRSUM_CLI_COMMANDS_H_
#define PAIRSUM_CLI_COMMANDS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pairsum/decode_config.h"
#include "pairsum/synthetic.h"

namespace pairsum::cli {

using KeyValues = std::map<std::string, std::string>;

struct TrainSettings {
  int order = 3;
  double lambda = 0.7;
  double epsilon = 1e-4;
  int cache_order = 0;  // 0: same as order

  void Apply(const KeyValues& kv);  // unknown keys throw
  KeyValues ToKeyValues() const;
};

struct SyntheticSettings {
  SyntheticTask task = SyntheticTask::kContrastive;
  int n = 8;
  int k = 1000;

  void Apply(const KeyValues& kv);
  KeyValues ToKeyValues() const;
};

// Optional delta/gamma grid; an empty axis keeps the configured value.
struct SweepSpec {
  std::vector<double> deltas;
  std::vector<double> gammas;
  bool empty() const { return deltas.empty() && gammas.empty(); }
};

struct CommandResult {
  std::vector<std::string> outputs;
  std::vector<std::string> warnings;
};

// Every command writes its outputs atomically plus a manifest next to the
// primary output, and throws std::exception subclasses on failure.

CommandResult RunTrain(const std::string& corpus_path, const std::string& out_path,
                       const TrainSettings& settings,
                       const std::optional<std::string>& seed = std::nullopt);

// Writes `out` (JSONL) and `out.skipped.jsonl`.
CommandResult RunBuildSynthetic(const std::string& corpus_path,
                                const std::string& out_path,
                                const SyntheticSettings& settings,
                                const std::optional<std::string>& seed = std::nullopt);

// `pairs` holds "A,B" specs. With a sweep, one file per grid point is written
// as <stem>.delta<d>.gamma<g><ext>.
CommandResult RunSummarize(const std::string& model_path,
                           const std::string& reviews_path,
                           const std::vector<std::string>& pairs,
                           const DecodeConfig& config, const std::string& out_path,
                           const SweepSpec& sweep = {}, int jobs = 1,
                           const std::optional<std::string>& seed = std::nullopt);

// `reviews_path` enables the novel n-gram section.
CommandResult RunEvaluate(const std::string& generated_path,
                          const std::string& references_path,
                          const std::optional<std::string>& reviews_path,
                          const std::string& out_path);

// Output path for one sweep grid point.
std::string SweepOutputPath(const std::string& out_path, double delta, double gamma);

}  // namespace pairsum::cli

#endif  // PAIRSUM_CLI_COMMANDS_H_
