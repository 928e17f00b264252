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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pairsum/aggregate.h"
#include "pairsum/cache_lm.h"
#include "pairsum/dataset.h"
#include "pairsum/decode_config.h"
#include "pairsum/metrics.h"
#include "pairsum/model_io.h"
#include "pairsum/nucleus.h"
#include "pairsum/summarizer.h"
#include "pairsum/synthetic.h"
#include "pairsum/tfidf.h"
#include "pairsum/tokenizer.h"

namespace py = pybind11;

namespace pairsum {
namespace {

using DistMap = std::map<TokenId, double>;

TokenDist ToDist(const DistMap& m) {
  std::vector<TokenDist::Entry> e;
  for (const auto& [id, p] : m) e.push_back({id, p});
  return TokenDist(std::move(e));
}

DistMap ToMap(const TokenDist& d) {
  DistMap m;
  for (const auto& e : d.entries()) m[e.id] = e.prob;
  return m;
}

py::dict ScoreDict(const RougeScore& s) {
  py::dict d;
  d["precision"] = s.precision;
  d["recall"] = s.recall;
  d["f1"] = s.f1;
  return d;
}

int RougeKind(const py::object& kind) {
  if (py::isinstance<py::str>(kind)) {
    const auto s = kind.cast<std::string>();
    if (s == "L" || s == "l") return kRougeL;
    throw py::value_error("ROUGE kind must be an int n >= 1 or \"L\"");
  }
  return kind.cast<int>();
}

std::map<std::string, std::string> KwargsToSettings(const py::dict& kwargs) {
  std::map<std::string, std::string> kv;
  for (const auto& [k, v] : kwargs) {
    kv[k.cast<std::string>()] = py::str(v).cast<std::string>();
  }
  return kv;
}

// Vocabulary plus cache-interpolated model, trained on raw review texts.
class Model {
 public:
  explicit Model(CacheInterpolatedLM lm) : lm_(std::move(lm)) {}

  static Model Train(const std::vector<std::string>& texts, int order, double epsilon,
                     double lambda, int cache_order) {
    Vocabulary vocab;
    std::vector<TokenSeq> corpus;
    for (const auto& t : texts) corpus.push_back(TokenizeAndExtend(t, &vocab));
    return Model(CacheInterpolatedLM(NGramLM::Train(corpus, order, epsilon, std::move(vocab)),
                                     lambda, cache_order));
  }

  const Vocabulary& vocab() const { return lm_.background().vocabulary(); }
  const CacheInterpolatedLM& lm() const { return lm_; }

  ReviewTokens Encode(const std::vector<std::string>& texts) const {
    ReviewTokens out;
    for (const auto& t : texts) out.push_back(Tokenize(t, vocab()));
    return out;
  }

  std::map<std::string, double> NextDist(const std::string& prefix,
                                         const std::vector<std::string>& reviews_a,
                                         const std::optional<std::vector<std::string>>& reviews_b) const {
    const ReviewTokens a = Encode(reviews_a);
    ReviewTokens b;
    if (reviews_b) b = Encode(*reviews_b);
    const TokenSeq p = Tokenize(prefix, vocab());
    const TokenDist d = reviews_b ? lm_.NextDist(p, Condition(a, b)) : lm_.NextDist(p, Condition(a));
    std::map<std::string, double> out;
    for (const auto& e : d.entries()) out[vocab().TokenOf(e.id)] = e.prob;
    return out;
  }

 private:
  CacheInterpolatedLM lm_;
};

py::dict TripleDict(const SummaryTriple& s) {
  py::dict d;
  d["pair_id"] = s.pair_id;
  d["entity_a"] = s.entity_a;
  d["entity_b"] = s.entity_b;
  d["contrastive_a"] = s.contrastive_a;
  d["contrastive_b"] = s.contrastive_b;
  d["common"] = s.common;
  return d;
}

py::object JsonToPy(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace
}  // namespace pairsum

PYBIND11_MODULE(_core, m) {
  using namespace pairsum;
  m.doc() = "Comparative opinion summarization with collaborative decoding";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::out_of_range& e) {
      PyErr_SetString(PyExc_KeyError, e.what());
    }
  });

  m.def("split_words", &SplitWords, py::arg("text"),
        "Lowercased word and punctuation tokens.");

  m.def("top_p_truncate",
        [](const DistMap& d, double top_p) { return ToMap(TopPTruncate(ToDist(d), top_p)); },
        py::arg("dist"), py::arg("top_p"));
  m.def("aggregate_contrastive",
        [](const DistMap& t, const DistMap& c, double delta, double top_p, double floor) {
          return ToMap(AggregateContrastive(ToDist(t), ToDist(c), delta, top_p, floor));
        },
        py::arg("target"), py::arg("counter"), py::arg("delta"), py::arg("top_p") = 0.9,
        py::arg("ratio_floor") = kDefaultRatioFloor);
  m.def("aggregate_contrastive_moe",
        [](const DistMap& t, const DistMap& c, double delta, double top_p, double floor) {
          return ToMap(AggregateContrastiveMoE(ToDist(t), ToDist(c), delta, top_p, floor));
        },
        py::arg("target"), py::arg("counter"), py::arg("delta"), py::arg("top_p") = 0.9,
        py::arg("ratio_floor") = kDefaultRatioFloor);
  m.def("aggregate_contrastive_vs_common",
        [](const DistMap& t, const DistMap& c, double delta, double top_p, double floor) {
          return ToMap(AggregateContrastiveVsCommon(ToDist(t), ToDist(c), delta, top_p, floor));
        },
        py::arg("target"), py::arg("common"), py::arg("delta"), py::arg("top_p") = 0.9,
        py::arg("ratio_floor") = kDefaultRatioFloor);
  m.def("aggregate_common",
        [](const DistMap& c, const DistMap& a, const DistMap& b, double gamma, double top_p) {
          return ToMap(AggregateCommon(ToDist(c), ToDist(a), ToDist(b), gamma, top_p));
        },
        py::arg("common"), py::arg("p_a"), py::arg("p_b"), py::arg("gamma"),
        py::arg("top_p") = 0.9);
  m.def("aggregate_common_poe",
        [](const DistMap& c, const DistMap& a, const DistMap& b, double gamma, double top_p,
           double floor) {
          return ToMap(AggregateCommonPoE(ToDist(c), ToDist(a), ToDist(b), gamma, top_p, floor));
        },
        py::arg("common"), py::arg("p_a"), py::arg("p_b"), py::arg("gamma"),
        py::arg("top_p") = 0.9, py::arg("ratio_floor") = kDefaultRatioFloor);

  py::class_<DecodeConfig>(m, "DecodeConfig")
      .def(py::init([](const py::kwargs& kwargs) {
        DecodeConfig c;
        c.Apply(KwargsToSettings(kwargs));
        c.Validate();
        return c;
      }))
      .def_readwrite("delta", &DecodeConfig::delta)
      .def_readwrite("gamma", &DecodeConfig::gamma)
      .def_readwrite("top_p", &DecodeConfig::top_p)
      .def_readwrite("beam_width", &DecodeConfig::beam_width)
      .def_readwrite("max_len_contrastive", &DecodeConfig::max_len_contrastive)
      .def_readwrite("max_len_common", &DecodeConfig::max_len_common)
      .def_readwrite("min_len", &DecodeConfig::min_len)
      .def_readwrite("length_penalty", &DecodeConfig::length_penalty)
      .def_readwrite("ratio_floor", &DecodeConfig::ratio_floor)
      .def_property(
          "mode", [](const DecodeConfig& c) { return std::string(DecodeModeName(c.mode)); },
          [](DecodeConfig& c, const std::string& s) { c.mode = ParseDecodeMode(s); })
      .def("validate", &DecodeConfig::Validate)
      .def("to_dict", &DecodeConfig::ToKeyValues)
      .def("__repr__", [](const DecodeConfig& c) {
        std::string s = "DecodeConfig(";
        bool first = true;
        for (const auto& [k, v] : c.ToKeyValues()) {
          s += (first ? "" : ", ") + k + "=" + v;
          first = false;
        }
        return s + ")";
      });

  py::class_<Model>(m, "Model")
      .def_static("train", &Model::Train, py::arg("texts"), py::arg("order") = 3,
                  py::arg("epsilon") = 1e-4,
                  py::arg("lambda_") = CacheInterpolatedLM::kDefaultLambda,
                  py::arg("cache_order") = 0)
      .def_static("load", [](const std::string& path) { return Model(LoadModelFile(path)); },
                  py::arg("path"))
      .def_static("from_bytes",
                  [](const py::bytes& b) { return Model(DeserializeModel(std::string(b))); },
                  py::arg("data"))
      .def("to_bytes", [](const Model& self) { return py::bytes(SerializeModel(self.lm())); })
      .def_property_readonly("order", [](const Model& self) { return self.lm().background().order(); })
      .def_property_readonly("lambda_", [](const Model& self) { return self.lm().lambda(); })
      .def_property_readonly("vocab_size", [](const Model& self) { return self.vocab().size(); })
      .def("next_dist", &Model::NextDist, py::arg("prefix"), py::arg("reviews_a"),
           py::arg("reviews_b") = std::nullopt,
           "Next-token distribution, keyed by token, conditioned on one or two review sets.")
      .def(
          "summarize_pair",
          [](const Model& self, const std::string& entity_a,
             const std::vector<std::string>& reviews_a, const std::string& entity_b,
             const std::vector<std::string>& reviews_b, const DecodeConfig& config) {
            const ReviewTokens a = self.Encode(reviews_a), b = self.Encode(reviews_b);
            SummaryTriple s;
            {
              py::gil_scoped_release release;
              const SummarizerModels models{self.lm(), self.lm()};
              s = SummarizePair(models, self.vocab(), entity_a, a, entity_b, b, config);
            }
            return TripleDict(s);
          },
          py::arg("entity_a"), py::arg("reviews_a"), py::arg("entity_b"), py::arg("reviews_b"),
          py::arg("config") = DecodeConfig{});

  m.def(
      "distinctiveness",
      [](const std::string& a, const std::string& b, const std::string& c,
         const std::string& semantics) {
        BagSemantics sem;
        if (semantics == "multiset") {
          sem = BagSemantics::kMultiset;
        } else if (semantics == "set") {
          sem = BagSemantics::kSet;
        } else {
          throw py::value_error("semantics must be \"multiset\" or \"set\"");
        }
        return Distinctiveness(TokenBag(SplitWords(a)), TokenBag(SplitWords(b)),
                               TokenBag(SplitWords(c)), sem);
      },
      py::arg("contrastive_a"), py::arg("contrastive_b"), py::arg("common"),
      py::arg("semantics") = "multiset");
  m.def(
      "rouge_n",
      [](const std::string& cand, const std::string& ref, int n) {
        return ScoreDict(RougeN(SplitWords(cand), SplitWords(ref), n));
      },
      py::arg("candidate"), py::arg("reference"), py::arg("n"));
  m.def(
      "rouge_l",
      [](const std::string& cand, const std::string& ref) {
        return ScoreDict(RougeL(SplitWords(cand), SplitWords(ref)));
      },
      py::arg("candidate"), py::arg("reference"));
  m.def(
      "rouge_multi",
      [](const std::string& cand, const std::vector<std::string>& refs, const py::object& kind) {
        std::vector<Words> r;
        for (const auto& s : refs) r.push_back(SplitWords(s));
        return ScoreDict(RougeMulti(SplitWords(cand), r, RougeKind(kind)));
      },
      py::arg("candidate"), py::arg("references"), py::arg("kind"));
  m.def(
      "intra_pair",
      [](const std::string& a, const std::string& b) {
        const IntraPairScore s = IntraPair(SplitWords(a), SplitWords(b));
        py::dict d;
        d["rouge1"] = s.rouge1;
        d["rouge2"] = s.rouge2;
        d["rougeL"] = s.rouge_l;
        return d;
      },
      py::arg("contrastive_a"), py::arg("contrastive_b"));
  m.def(
      "novel_ngram_rate",
      [](const std::string& summary, const std::string& input, int n) {
        return NovelNgramRate(SplitWords(summary), SplitWords(input), n);
      },
      py::arg("summary"), py::arg("input"), py::arg("n"));

  py::class_<TfidfModel>(m, "TfidfModel")
      .def(py::init([](const std::vector<std::string>& docs) {
             std::vector<Words> words;
             for (const auto& d : docs) words.push_back(SplitWords(d));
             return TfidfModel(words);
           }),
           py::arg("documents"))
      .def("idf", &TfidfModel::Idf, py::arg("token"))
      .def(
          "similarity",
          [](const TfidfModel& self, const std::string& a, const std::string& b) {
            return self.Similarity(SplitWords(a), SplitWords(b));
          },
          py::arg("a"), py::arg("b"));

  m.def(
      "load_reviews",
      [](const std::string& path) {
        py::dict out;
        for (const auto& set : LoadReviews(path)) {
          py::list reviews;
          for (const auto& r : set.reviews) {
            py::dict d;
            d["review_id"] = r.review_id;
            d["text"] = r.text;
            d["length"] = r.length;
            reviews.append(d);
          }
          out[py::str(set.entity_id)] = reviews;
        }
        return out;
      },
      py::arg("path"), "Reviews grouped by entity id, in file order.");
  m.def(
      "build_synthetic",
      [](const std::string& path, const std::string& task, int n, int k) {
        const SyntheticResult res = BuildSynthetic(LoadReviews(path), ParseSyntheticTask(task), n, k);
        py::list pairs;
        for (const auto& p : res.pairs) {
          pairs.append(JsonToPy(nlohmann::json::parse(SyntheticPairJson(p))));
        }
        py::list skipped;
        for (const auto& s : res.skipped) {
          py::dict d;
          d["entity_id"] = s.entity_id;
          d["review_id"] = s.review_id;
          d["reason"] = s.reason;
          skipped.append(d);
        }
        py::dict out;
        out["pairs"] = pairs;
        out["skipped"] = skipped;
        out["short_of_k"] = res.short_of_k;
        return out;
      },
      py::arg("path"), py::arg("task"), py::arg("n") = 8, py::arg("k") = 1000);
}
