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

#include "pairsum/tfidf.h"

#include <cmath>
#include <set>

namespace pairsum {

TfidfModel::TfidfModel(const std::vector<Words>& documents)
    : num_docs_(documents.size()) {
  for (const auto& doc : documents) {
    for (const auto& token : std::set<std::string>(doc.begin(), doc.end())) {
      ++df_[token];
    }
  }
}

double TfidfModel::Idf(const std::string& token) const {
  auto it = df_.find(token);
  const double df = it == df_.end() ? 0.0 : static_cast<double>(it->second);
  return std::log((1.0 + static_cast<double>(num_docs_)) / (1.0 + df)) + 1.0;
}

TermVector TfidfModel::Vectorize(const Words& tokens) const {
  TermVector v;
  for (const auto& t : tokens) v[t] += 1.0;
  double norm = 0.0;
  for (auto& [token, w] : v) {
    w *= Idf(token);
    norm += w * w;
  }
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (auto& [token, w] : v) w /= norm;
  }
  return v;
}

double TfidfModel::Similarity(const Words& a, const Words& b) const {
  return Cosine(Vectorize(a), Vectorize(b));
}

double Cosine(const TermVector& a, const TermVector& b) {
  const TermVector& small = a.size() <= b.size() ? a : b;
  const TermVector& large = a.size() <= b.size() ? b : a;
  double dot = 0.0;
  for (const auto& [token, w] : small) {
    auto it = large.find(token);
    if (it != large.end()) dot += w * it->second;
  }
  return dot;
}

}  // namespace pairsum
