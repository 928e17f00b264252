# Copyright 2026 The Pairsum Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Comparative opinion summarization with collaborative decoding."""

from pairsum._core import (
    DecodeConfig,
    Model,
    TfidfModel,
    aggregate_common,
    aggregate_common_poe,
    aggregate_contrastive,
    aggregate_contrastive_moe,
    aggregate_contrastive_vs_common,
    build_synthetic,
    distinctiveness,
    intra_pair,
    load_reviews,
    novel_ngram_rate,
    rouge_l,
    rouge_multi,
    rouge_n,
    split_words,
    top_p_truncate,
)

__version__ = "0.1.0"

__all__ = [
    "DecodeConfig",
    "Model",
    "TfidfModel",
    "aggregate_common",
    "aggregate_common_poe",
    "aggregate_contrastive",
    "aggregate_contrastive_moe",
    "aggregate_contrastive_vs_common",
    "build_synthetic",
    "distinctiveness",
    "intra_pair",
    "load_reviews",
    "novel_ngram_rate",
    "rouge_l",
    "rouge_multi",
    "rouge_n",
    "split_words",
    "top_p_truncate",
]
