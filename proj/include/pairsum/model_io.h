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

#ifndef PAIRSUM_MODEL_IO_H_
#define PAIRSUM_MODEL_IO_H_

#include <string>

#include "pairsum/cache_lm.h"

namespace pairsum {

inline constexpr int kModelFormatVersion = 1;

// Versioned JSON container holding the vocabulary, the n-gram counts and the
// interpolation parameters. Serialization is canonical: save -> load -> save
// reproduces the same bytes.
std::string SerializeModel(const CacheInterpolatedLM& lm);

// Throws std::runtime_error on malformed input or a version mismatch.
CacheInterpolatedLM DeserializeModel(const std::string& bytes);

CacheInterpolatedLM LoadModelFile(const std::string& path);

}  // namespace pairsum

#endif  // PAIRSUM_MODEL_IO_H_
