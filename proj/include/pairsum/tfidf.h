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

#ifndef PAIRSUM_TFIDF_H_
#define PAIRSUM_TFIDF_H_

#include <map>
#include <string>
#include <vector>

#include "pairsum/metrics.h"

namespace pairsum {

// Unit-length TF-IDF vector keyed by token.
using TermVector = std::map<std::string, double>;

// Document frequencies over a fixed collection, with smoothed idf
//   idf(t) = ln((1 + N) / (1 + df(t))) + 1.
class TfidfModel {
 public:
  explicit TfidfModel(const std::vector<Words>& documents);

  double Idf(const std::string& token) const;
  // Raw term counts weighted by idf, L2-normalized. Empty input gives an
  // empty vector.
  TermVector Vectorize(const Words& tokens) const;
  double Similarity(const Words& a, const Words& b) const;

  std::size_t num_documents() const { return num_docs_; }

 private:
  std::size_t num_docs_;
  std::map<std::string, std::size_t> df_;
};

// Dot product of two term vectors; cosine when both are unit length.
double Cosine(const TermVector& a, const TermVector& b);

}  // namespace pairsum

#endif  // PAIRSUM_TFIDF_H_
