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

#include "pairsum/cli/commands.h"

#include <array>
#include <charconv>
#include <filesystem>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "pairsum/cli/manifest.h"
#include "pairsum/dataset.h"
#include "pairsum/metrics.h"
#include "pairsum/model_io.h"
#include "pairsum/ngram_lm.h"
#include "pairsum/summarizer.h"
#include "pairsum/tokenizer.h"

namespace pairsum::cli {

using nlohmann::json;

namespace {

std::string FormatDouble(double v) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

template <typename T>
T ParseNumber(const std::string& key, const std::string& value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw std::invalid_argument("config key '" + key + "': bad value " + value);
  }
  return out;
}

void WriteManifest(RunManifest manifest, const std::string& primary_output) {
  WriteFileAtomic(ManifestPathFor(primary_output), manifest.ToJson());
}

json ScoreJson(const RougeScore& s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

// Averages numeric leaves of same-shaped JSON trees, ignoring nulls.
json MeanTree(const std::vector<const json*>& trees) {
  const json* first = nullptr;
  for (const json* t : trees) {
    if (!t->is_null()) {
      first = t;
      break;
    }
  }
  if (!first) return nullptr;
  if (first->is_object()) {
    json out = json::object();
    for (const auto& [key, value] : first->items()) {
      std::vector<const json*> children;
      for (const json* t : trees) {
        if (t->is_object() && t->contains(key)) children.push_back(&(*t)[key]);
      }
      json mean = MeanTree(children);
      if (!mean.is_null()) out[key] = std::move(mean);
    }
    return out;
  }
  if (first->is_number()) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const json* t : trees) {
      if (t->is_number()) {
        sum += t->get<double>();
        ++count;
      }
    }
    return sum / static_cast<double>(count);
  }
  return nullptr;
}

std::pair<std::string, std::string> ParsePairSpec(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == spec.size() ||
      spec.find(',', comma + 1) != std::string::npos) {
    throw std::invalid_argument("pair spec must be \"A,B\": " + spec);
  }
  return {spec.substr(0, comma), spec.substr(comma + 1)};
}

std::vector<Words> ReferenceList(const json& record, const char* field,
                                 const std::string& pair_id) {
  if (!record.contains(field)) {
    throw std::runtime_error("references for " + pair_id + " lack \"" + field + "\"");
  }
  const json& value = record[field];
  std::vector<Words> refs;
  if (value.is_string()) {
    refs.push_back(SplitWords(value.get<std::string>()));
  } else if (value.is_array() && !value.empty()) {
    for (const auto& r : value) refs.push_back(SplitWords(r.get<std::string>()));
  } else {
    throw std::runtime_error("references for " + pair_id + ": \"" + field +
                             "\" must be a string or a non-empty list");
  }
  return refs;
}

Words ConcatReviews(const EntityReviewSet& set) {
  Words all;
  for (const auto& r : set.reviews) {
    Words w = SplitWords(r.text);
    all.insert(all.end(), w.begin(), w.end());
  }
  return all;
}

json NovelRates(const Words& summary, const Words& input) {
  json out = json::object();
  for (int n : {1, 2}) {
    if (static_cast<int>(summary.size()) < n) {
      out[std::to_string(n)] = nullptr;
    } else {
      out[std::to_string(n)] = NovelNgramRate(summary, input, n);
    }
  }
  return out;
}

}  // namespace

void TrainSettings::Apply(const KeyValues& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "order") {
      order = ParseNumber<int>(key, value);
    } else if (key == "lambda") {
      lambda = ParseNumber<double>(key, value);
    } else if (key == "epsilon") {
      epsilon = ParseNumber<double>(key, value);
    } else if (key == "cache_order") {
      cache_order = ParseNumber<int>(key, value);
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
}

KeyValues TrainSettings::ToKeyValues() const {
  return {{"order", std::to_string(order)},
          {"lambda", FormatDouble(lambda)},
          {"epsilon", FormatDouble(epsilon)},
          {"cache_order", std::to_string(cache_order)}};
}

void SyntheticSettings::Apply(const KeyValues& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "task") {
      task = ParseSyntheticTask(value);
    } else if (key == "n") {
      n = ParseNumber<int>(key, value);
    } else if (key == "k") {
      k = ParseNumber<int>(key, value);
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
}

KeyValues SyntheticSettings::ToKeyValues() const {
  return {{"task", std::string(SyntheticTaskName(task))},
          {"n", std::to_string(n)},
          {"k", std::to_string(k)}};
}

CommandResult RunTrain(const std::string& corpus_path, const std::string& out_path,
                       const TrainSettings& settings,
                       const std::optional<std::string>& seed) {
  const auto corpus = LoadReviews(corpus_path);
  Vocabulary vocab;
  std::vector<TokenSeq> sequences;
  for (const auto& set : corpus) {
    for (const auto& r : set.reviews) {
      sequences.push_back(TokenizeAndExtend(r.text, &vocab));
    }
  }
  NGramLM background = NGramLM::Train(sequences, settings.order,
                                      settings.epsilon, std::move(vocab));
  const CacheInterpolatedLM model(std::move(background), settings.lambda,
                                  settings.cache_order);
  const std::string bytes = SerializeModel(model);
  WriteFileAtomic(out_path, bytes);

  RunManifest manifest{"train", settings.ToKeyValues(), {corpus_path}, {out_path},
                       Fingerprint(bytes), seed};
  WriteManifest(std::move(manifest), out_path);
  return {{out_path}, {}};
}

CommandResult RunBuildSynthetic(const std::string& corpus_path,
                                const std::string& out_path,
                                const SyntheticSettings& settings,
                                const std::optional<std::string>& seed) {
  const auto corpus = LoadReviews(corpus_path);
  const SyntheticResult result =
      BuildSynthetic(corpus, settings.task, settings.n, settings.k);

  std::string lines;
  for (const auto& pair : result.pairs) lines += SyntheticPairJson(pair) + "\n";
  WriteFileAtomic(out_path, lines);

  std::string skipped;
  for (const auto& s : result.skipped) {
    skipped += json{{"entity_id", s.entity_id},
                    {"review_id", s.review_id},
                    {"reason", s.reason}}
                   .dump() +
               "\n";
  }
  const std::string skip_path = out_path + ".skipped.jsonl";
  WriteFileAtomic(skip_path, skipped);

  CommandResult out{{out_path, skip_path}, {}};
  if (result.short_of_k) {
    out.warnings.push_back("produced " + std::to_string(result.pairs.size()) +
                           " pairs, fewer than K=" + std::to_string(settings.k));
  }
  RunManifest manifest{"build-synthetic", settings.ToKeyValues(), {corpus_path},
                       out.outputs, std::nullopt, seed};
  WriteManifest(std::move(manifest), out_path);
  return out;
}

std::string SweepOutputPath(const std::string& out_path, double delta, double gamma) {
  const std::filesystem::path p(out_path);
  std::string name = p.stem().string() + ".delta" + FormatDouble(delta) + ".gamma" +
                     FormatDouble(gamma) + p.extension().string();
  return (p.parent_path() / name).string();
}

CommandResult RunSummarize(const std::string& model_path,
                           const std::string& reviews_path,
                           const std::vector<std::string>& pairs,
                           const DecodeConfig& config, const std::string& out_path,
                           const SweepSpec& sweep, int jobs,
                           const std::optional<std::string>& seed) {
  config.Validate();
  if (pairs.empty()) throw std::invalid_argument("no pairs requested");
  const std::string model_bytes = ReadFile(model_path);
  const CacheInterpolatedLM model = DeserializeModel(model_bytes);
  const Vocabulary& vocab = model.background().vocabulary();
  const auto corpus = LoadReviews(reviews_path);

  std::vector<std::pair<std::string, std::string>> specs;
  std::map<std::string, ReviewTokens> encoded;
  for (const auto& spec : pairs) {
    auto ids = ParsePairSpec(spec);
    for (const auto& id : {ids.first, ids.second}) {
      const EntityReviewSet* set = FindEntity(corpus, id);
      if (!set) throw std::invalid_argument("unknown entity id: " + id);
      if (!encoded.count(id)) encoded.emplace(id, EncodeReviews(*set, vocab));
    }
    specs.push_back(std::move(ids));
  }

  std::vector<std::pair<double, double>> grid;
  if (sweep.empty()) {
    grid.emplace_back(config.delta, config.gamma);
  } else {
    const auto deltas = sweep.deltas.empty() ? std::vector<double>{config.delta} : sweep.deltas;
    const auto gammas = sweep.gammas.empty() ? std::vector<double>{config.gamma} : sweep.gammas;
    for (double d : deltas) {
      for (double g : gammas) grid.emplace_back(d, g);
    }
  }

  const SummarizerModels models{model, model};
  CommandResult result;
  for (const auto& [delta, gamma] : grid) {
    DecodeConfig cfg = config;
    cfg.delta = delta;
    cfg.gamma = gamma;
    cfg.Validate();

    auto decode = [&](std::size_t i) {
      const auto& [a, b] = specs[i];
      return SummarizePair(models, vocab, a, encoded.at(a), b, encoded.at(b), cfg);
    };
    std::vector<SummaryTriple> triples(specs.size());
    const std::size_t workers = std::max(1, jobs);
    for (std::size_t start = 0; start < specs.size(); start += workers) {
      std::vector<std::future<SummaryTriple>> batch;
      for (std::size_t i = start; i < std::min(specs.size(), start + workers); ++i) {
        batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                   decode, i));
      }
      for (std::size_t i = 0; i < batch.size(); ++i) triples[start + i] = batch[i].get();
    }

    json summaries = json::array();
    for (const auto& t : triples) {
      summaries.push_back({{"pair_id", t.pair_id},
                           {"entity_a", t.entity_a},
                           {"entity_b", t.entity_b},
                           {"contrastive_a", t.contrastive_a},
                           {"contrastive_b", t.contrastive_b},
                           {"common", t.common}});
    }
    json doc = {{"config", cfg.ToKeyValues()}, {"summaries", std::move(summaries)}};
    const std::string path = sweep.empty() ? out_path : SweepOutputPath(out_path, delta, gamma);
    WriteFileAtomic(path, doc.dump(2) + "\n");
    result.outputs.push_back(path);
  }

  auto effective = config.ToKeyValues();
  if (!sweep.empty()) {
    std::string ds, gs;
    for (double d : sweep.deltas) ds += (ds.empty() ? "" : ",") + FormatDouble(d);
    for (double g : sweep.gammas) gs += (gs.empty() ? "" : ",") + FormatDouble(g);
    effective["sweep_delta"] = ds;
    effective["sweep_gamma"] = gs;
  }
  std::string pair_list;
  for (const auto& p : pairs) pair_list += (pair_list.empty() ? "" : ";") + p;
  effective["pairs"] = pair_list;
  RunManifest manifest{"summarize", std::move(effective), {model_path, reviews_path},
                       result.outputs, Fingerprint(model_bytes), seed};
  WriteManifest(std::move(manifest), out_path);
  return result;
}

CommandResult RunEvaluate(const std::string& generated_path,
                          const std::string& references_path,
                          const std::optional<std::string>& reviews_path,
                          const std::string& out_path) {
  json generated;
  try {
    generated = json::parse(ReadFile(generated_path));
  } catch (const json::exception&) {
    throw std::runtime_error("generated file is not valid JSON: " + generated_path);
  }
  if (!generated.contains("summaries") || !generated["summaries"].is_array()) {
    throw std::runtime_error("generated file lacks a \"summaries\" array");
  }

  std::map<std::string, json> references;
  {
    std::istringstream in(ReadFile(references_path));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      json record;
      try {
        record = json::parse(line);
      } catch (const json::exception&) {
        throw std::runtime_error("references line " + std::to_string(line_no) +
                                 ": invalid JSON");
      }
      if (!record.contains("pair_id") || !record["pair_id"].is_string()) {
        throw std::runtime_error("references line " + std::to_string(line_no) +
                                 ": missing \"pair_id\"");
      }
      references.emplace(record["pair_id"].get<std::string>(), std::move(record));
    }
  }

  std::set<std::string> generated_ids;
  for (const auto& s : generated["summaries"]) {
    generated_ids.insert(s.at("pair_id").get<std::string>());
  }
  std::string missing_refs, missing_gen;
  for (const auto& id : generated_ids) {
    if (!references.count(id)) missing_refs += (missing_refs.empty() ? "" : " ") + id;
  }
  for (const auto& [id, rec] : references) {
    if (!generated_ids.count(id)) missing_gen += (missing_gen.empty() ? "" : " ") + id;
  }
  if (!missing_refs.empty() || !missing_gen.empty()) {
    std::string msg = "pair id mismatch:";
    if (!missing_refs.empty()) msg += " missing references for [" + missing_refs + "]";
    if (!missing_gen.empty()) msg += " missing generated summaries for [" + missing_gen + "]";
    throw std::runtime_error(msg);
  }

  std::vector<EntityReviewSet> corpus;
  if (reviews_path) corpus = LoadReviews(*reviews_path);

  static constexpr std::array<const char*, 3> kFields = {"contrastive_a", "contrastive_b",
                                                         "common"};
  json records = json::array();
  for (const auto& s : generated["summaries"]) {
    const std::string id = s.at("pair_id").get<std::string>();
    const json& ref = references.at(id);
    std::map<std::string, Words> gen;
    for (const char* f : kFields) gen[f] = SplitWords(s.at(f).get<std::string>());

    json rouge = json::object();
    for (const char* f : kFields) {
      const auto refs = ReferenceList(ref, f, id);
      rouge[f] = {{"rouge1", ScoreJson(RougeMulti(gen[f], refs, 1))},
                  {"rouge2", ScoreJson(RougeMulti(gen[f], refs, 2))},
                  {"rougeL", ScoreJson(RougeMulti(gen[f], refs, kRougeL))}};
    }
    const double ds = Distinctiveness(TokenBag(gen["contrastive_a"]),
                                      TokenBag(gen["contrastive_b"]),
                                      TokenBag(gen["common"]));
    const IntraPairScore intra = IntraPair(gen["contrastive_a"], gen["contrastive_b"]);
    json record = {{"pair_id", id},
                   {"rouge", std::move(rouge)},
                   {"distinctiveness", ds},
                   {"intra_rouge",
                    {{"rouge1", intra.rouge1}, {"rouge2", intra.rouge2},
                     {"rougeL", intra.rouge_l}}}};
    if (reviews_path) {
      const auto ids = ParsePairSpec(id);
      const EntityReviewSet* a = FindEntity(corpus, ids.first);
      const EntityReviewSet* b = FindEntity(corpus, ids.second);
      if (!a || !b) throw std::runtime_error("unknown entity in pair " + id);
      const Words input_a = ConcatReviews(*a);
      const Words input_b = ConcatReviews(*b);
      Words input_ab = input_a;
      input_ab.insert(input_ab.end(), input_b.begin(), input_b.end());
      record["novel_ngrams"] = {{"contrastive_a", NovelRates(gen["contrastive_a"], input_a)},
                                {"contrastive_b", NovelRates(gen["contrastive_b"], input_b)},
                                {"common", NovelRates(gen["common"], input_ab)}};
    }
    records.push_back(std::move(record));
  }

  std::vector<const json*> trees;
  for (const auto& r : records) trees.push_back(&r);
  json means = records.empty() ? json::object() : MeanTree(trees);
  json doc = {{"pairs", std::move(records)}, {"means", std::move(means)},
              {"num_pairs", generated["summaries"].size()}};
  WriteFileAtomic(out_path, doc.dump(2) + "\n");

  std::vector<std::string> inputs = {generated_path, references_path};
  if (reviews_path) inputs.push_back(*reviews_path);
  RunManifest manifest{"evaluate", {}, inputs, {out_path}, std::nullopt, std::nullopt};
  WriteManifest(std::move(manifest), out_path);
  return {{out_path}, {}};
}

}  // namespace pairsum::cli
