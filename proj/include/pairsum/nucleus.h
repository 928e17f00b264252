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

#ifndef PAIRSUM_NUCLEUS_H_
#define PAIRSUM_NUCLEUS_H_

#include "pairsum/token_dist.h"

namespace pairsum {

// Keeps the smallest set of most probable tokens whose cumulative mass
// reaches `top_p` and renormalizes it. Equal probabilities are ordered by
// ascending id. top_p >= 1 returns `dist` unchanged.
// Throws std::invalid_argument unless 0 < top_p <= 1.
TokenDist TopPTruncate(const TokenDist& dist, double top_p);

}  // namespace pairsum

#endif  // PAIRSUM_NUCLEUS_H_
