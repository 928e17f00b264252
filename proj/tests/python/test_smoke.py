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


import json
import math
import os
import pathlib

import pytest

import pairsum

ROOT = pathlib.Path(os.environ.get("PAIRSUM_SOURCE_DIR", pathlib.Path(__file__).parents[2]))
REVIEWS = ROOT / "data" / "sample" / "reviews.jsonl"


@pytest.fixture(scope="module")
def corpus():
    return pairsum.load_reviews(str(REVIEWS))


@pytest.fixture(scope="module")
def model(corpus):
    texts = [r["text"] for reviews in corpus.values() for r in reviews]
    return pairsum.Model.train(texts, order=3)


def texts(corpus, entity):
    return [r["text"] for r in corpus[entity]]


def test_split_words():
    assert pairsum.split_words("The cat sat.") == ["the", "cat", "sat", "."]
    a, b = pairsum.split_words("Café café")
    assert a == b


def test_top_p_and_reductions():
    dist = {3: 0.5, 4: 0.3, 5: 0.2}
    assert pairsum.top_p_truncate(dist, 0.8) == pytest.approx({3: 0.625, 4: 0.375})
    counter = {3: 0.2, 4: 0.3, 5: 0.5}
    base = pairsum.top_p_truncate(dist, 0.9)
    assert pairsum.aggregate_contrastive(dist, counter, 0.0) == base
    assert pairsum.aggregate_common(dist, counter, counter, 0.0) == base


def test_contrastive_fallback_example():
    out = pairsum.aggregate_contrastive({3: 0.5, 4: 0.5}, {3: 0.95, 4: 0.05}, 1.0, 0.9)
    assert out[3] == pytest.approx(0.25 / 5.25, abs=1e-12)
    assert out[4] == pytest.approx(5.0 / 5.25, abs=1e-12)


def test_common_is_symmetric():
    c, a, b = {3: 0.6, 4: 0.4}, {3: 0.1, 5: 0.9}, {4: 0.7, 6: 0.3}
    assert pairsum.aggregate_common(c, a, b, 0.5) == pairsum.aggregate_common(c, b, a, 0.5)


def test_invalid_arguments_raise():
    with pytest.raises(ValueError):
        pairsum.top_p_truncate({3: 1.0}, 0.0)
    with pytest.raises(ValueError):
        pairsum.DecodeConfig(beam=3)
    with pytest.raises(ValueError):
        pairsum.DecodeConfig(top_p=2)


def test_decode_config():
    cfg = pairsum.DecodeConfig(delta=2, mode="common_poe_ablation")
    assert cfg.delta == 2.0
    assert cfg.mode == "common_poe_ablation"
    assert cfg.beam_width == 4 and cfg.top_p == 0.9
    assert cfg.to_dict()["gamma"] == "0.5"


def test_model_round_trip(model):
    data = model.to_bytes()
    assert pairsum.Model.from_bytes(data).to_bytes() == data
    assert model.order == 3


def test_next_dist_is_normalized(model, corpus):
    dist = model.next_dist("the room", texts(corpus, "h1"))
    assert math.isclose(sum(dist.values()), 1.0, abs_tol=1e-9)
    pooled = model.next_dist("the", texts(corpus, "h1"), texts(corpus, "h2"))
    assert pooled == model.next_dist("the", texts(corpus, "h2"), texts(corpus, "h1"))


def test_summarize_pair(model, corpus):
    cfg = pairsum.DecodeConfig(max_len_contrastive=40, max_len_common=30)
    ab = model.summarize_pair("h1", texts(corpus, "h1"), "h2", texts(corpus, "h2"), cfg)
    ba = model.summarize_pair("h2", texts(corpus, "h2"), "h1", texts(corpus, "h1"), cfg)
    assert ab["pair_id"] == "h1,h2"
    assert all(ab[k] for k in ("contrastive_a", "contrastive_b", "common"))
    assert ab["contrastive_a"] == ba["contrastive_b"]
    assert ab["common"] == ba["common"]
    with pytest.raises(ValueError):
        model.summarize_pair("x", [], "h1", texts(corpus, "h1"), cfg)


def test_metrics():
    assert pairsum.distinctiveness("a b", "b c", "d") == pytest.approx(0.75)
    assert pairsum.distinctiveness("a a b", "a b b", "a", semantics="set") == 0.0
    assert pairsum.rouge_n("the cat sat", "the cat", 1)["f1"] == pytest.approx(0.8)
    assert pairsum.rouge_l("a b c d", "a c d")["precision"] == pytest.approx(0.75)
    assert pairsum.rouge_multi("the cat sat", ["the cat", "the x"], 1)["f1"] == pytest.approx(0.6)
    assert pairsum.rouge_multi("a b", ["a b"], "L")["f1"] == 1.0
    assert pairsum.intra_pair("a b", "c d") == {"rouge1": 0.0, "rouge2": 0.0, "rougeL": 0.0}
    assert pairsum.novel_ngram_rate("a b", "a", 1) == 0.5
    with pytest.raises(ValueError, match="summary too short"):
        pairsum.novel_ngram_rate("a", "a", 2)


def test_tfidf():
    tfidf = pairsum.TfidfModel(["a b", "a c", "a d d"])
    l = 1 + math.log(2)
    assert tfidf.similarity("a b", "a c") == pytest.approx(1 / (1 + l * l), abs=1e-9)
    assert tfidf.similarity("b", "c") == 0.0


def test_dataset(corpus):
    assert sorted(corpus) == [f"h{i}" for i in range(1, 9)]
    assert all(len(v) == 8 for v in corpus.values())
    golden = ROOT / "tests" / "golden"
    result = pairsum.build_synthetic(str(golden / "synthetic_reviews.jsonl"), "contrastive", 3, 5)
    lines = (golden / "synthetic_contrastive_n3_k5.jsonl").read_text().splitlines()
    assert len(result["pairs"]) == len(lines) == 5
    for got, line in zip(result["pairs"], lines):
        want = json.loads(line)
        assert got["summary_review_id"] == want["summary_review_id"]
        assert got["input_review_ids"] == want["input_review_ids"]
        assert got["similarity_sum"] == pytest.approx(want["similarity_sum"], abs=1e-12)
    with pytest.raises(ValueError):
        pairsum.build_synthetic(str(REVIEWS), "summary", 3, 5)
