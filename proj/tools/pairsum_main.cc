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

// pairsum: train, build-synthetic, summarize, evaluate.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pairsum/cli/commands.h"
#include "pairsum/cli/manifest.h"
#include "pairsum/decode_config.h"

namespace {

using pairsum::cli::KeyValues;

// Flag values are kept as text and parsed by the same code as config files,
// so both sources share one validation path.
struct FlagSet {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void Add(CLI::App* app, const std::string& flag, const std::string& key,
           const std::string& help) {
    options[key] = app->add_option(flag, values[key], help);
  }

  KeyValues Given() const {
    KeyValues kv;
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) kv[key] = values.at(key);
    }
    return kv;
  }
};

std::vector<double> ParseList(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad list value: " + item);
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void PrintWarnings(const pairsum::cli::CommandResult& result) {
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comparative opinion summarization with collaborative decoding"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pairsum::cli::kToolVersion);

  std::string config_path;
  std::string out_path;
  std::optional<std::string> seed;
  auto add_shared = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Key-value configuration file")
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "Reserved; decoding is deterministic");
    sub->add_option("--out", out_path, "Output path")->required();
  };

  // train
  auto* train = app.add_subcommand("train", "Train the background n-gram model");
  std::string train_corpus;
  train->add_option("--corpus", train_corpus, "Reviews JSONL")->required();
  FlagSet train_flags;
  train_flags.Add(train, "--order", "order", "n-gram order (default 3)");
  train_flags.Add(train, "--lambda", "lambda", "cache interpolation weight (default 0.7)");
  train_flags.Add(train, "--epsilon", "epsilon", "add-epsilon smoothing mass (default 1e-4)");
  train_flags.Add(train, "--cache-order", "cache_order", "cache n-gram order (0: same as --order)");
  add_shared(train);

  // build-synthetic
  auto* synth = app.add_subcommand("build-synthetic", "Build self-supervised training pairs");
  std::string synth_corpus;
  synth->add_option("--corpus", synth_corpus, "Reviews JSONL")->required();
  FlagSet synth_flags;
  synth_flags.Add(synth, "--task", "task", "contrastive | common");
  synth_flags.Add(synth, "--n", "n", "input reviews per pair (default 8)");
  synth_flags.Add(synth, "--k", "k", "number of pairs to keep (default 1000)");
  add_shared(synth);

  // summarize
  auto* summ = app.add_subcommand("summarize", "Decode summaries for entity pairs");
  std::string model_path, reviews_path;
  std::vector<std::string> pairs;
  std::string sweep_delta, sweep_gamma;
  int jobs = 1;
  summ->add_option("--model", model_path, "Model file from `train`")->required();
  summ->add_option("--reviews", reviews_path, "Reviews JSONL")->required();
  summ->add_option("--pair", pairs, "Entity pair \"A,B\" (repeatable)")->required();
  summ->add_option("--sweep-delta", sweep_delta, "Comma-separated delta grid");
  summ->add_option("--sweep-gamma", sweep_gamma, "Comma-separated gamma grid");
  summ->add_option("--jobs", jobs, "Pairs decoded concurrently")->check(CLI::PositiveNumber);
  FlagSet decode_flags;
  decode_flags.Add(summ, "--delta", "delta", "contrastive trade-off");
  decode_flags.Add(summ, "--gamma", "gamma", "common trade-off");
  decode_flags.Add(summ, "--top-p", "top_p", "nucleus mass");
  decode_flags.Add(summ, "--beam-width", "beam_width", "beam width");
  decode_flags.Add(summ, "--min-len", "min_len", "minimum summary length");
  decode_flags.Add(summ, "--max-len-contrastive", "max_len_contrastive", "contrastive length cap");
  decode_flags.Add(summ, "--max-len-common", "max_len_common", "common length cap");
  decode_flags.Add(summ, "--length-penalty", "length_penalty", "length normalization exponent");
  decode_flags.Add(summ, "--mode", "mode", "aggregation mode");
  decode_flags.Add(summ, "--ratio-floor", "ratio_floor", "floor for ratio denominators");
  add_shared(summ);

  // evaluate
  auto* eval = app.add_subcommand("evaluate", "Score generated summaries");
  std::string generated_path, references_path;
  std::optional<std::string> eval_reviews;
  eval->add_option("--generated", generated_path, "JSON from `summarize`")->required();
  eval->add_option("--references", references_path, "Reference JSONL")->required();
  eval->add_option("--reviews", eval_reviews, "Reviews JSONL (enables novel n-gram rates)");
  add_shared(eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    KeyValues file_kv;
    if (!config_path.empty()) file_kv = pairsum::ReadKeyValueFile(config_path);

    if (train->parsed()) {
      pairsum::cli::TrainSettings settings;
      settings.Apply(file_kv);
      settings.Apply(train_flags.Given());
      PrintWarnings(pairsum::cli::RunTrain(train_corpus, out_path, settings, seed));
    } else if (synth->parsed()) {
      pairsum::cli::SyntheticSettings settings;
      settings.Apply(file_kv);
      settings.Apply(synth_flags.Given());
      PrintWarnings(pairsum::cli::RunBuildSynthetic(synth_corpus, out_path, settings, seed));
    } else if (summ->parsed()) {
      pairsum::DecodeConfig cfg;
      cfg.Apply(file_kv);
      cfg.Apply(decode_flags.Given());
      cfg.Validate();
      pairsum::cli::SweepSpec sweep;
      if (!sweep_delta.empty()) sweep.deltas = ParseList(sweep_delta);
      if (!sweep_gamma.empty()) sweep.gammas = ParseList(sweep_gamma);
      PrintWarnings(pairsum::cli::RunSummarize(model_path, reviews_path, pairs, cfg,
                                               out_path, sweep, jobs, seed));
    } else if (eval->parsed()) {
      if (!file_kv.empty()) {
        throw std::invalid_argument("unknown config key: " + file_kv.begin()->first);
      }
      PrintWarnings(
          pairsum::cli::RunEvaluate(generated_path, references_path, eval_reviews, out_path));
    }
  } catch (const std::exception& e) {
    std::string reason = e.what();
    for (char& c : reason) {
      if (c == '\n') c = ' ';
    }
    std::cerr << "error: " << reason << "\n";
    return 1;
  }
  return EXIT_SUCCESS;
}
