#!/usr/bin/env python3
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
"""Writes the bundled sample corpus under data/sample/.

Four hotel pairs. Every hotel shares a pool of generic praise sentences with
its partner and owns a few sentences nobody else uses, so the shared material
dominates raw frequencies while entity-specific material stays detectable.
"""

import json
import pathlib
import random

SHARED = [
    "the staff was friendly and helpful",
    "the location was great for walking around the city",
    "the room was clean and comfortable",
    "the bed was comfortable and the room was quiet",
    "check in was quick and easy",
]

SPECIFIC = {
    "h1": ["the rooftop pool had a stunning view of the harbor",
           "the spa offered excellent massages at a fair price"],
    "h2": ["the breakfast buffet was huge with fresh pastries",
           "the lobby had a cozy fireplace and live piano music"],
    "h3": ["the gym was modern with new treadmills and free weights",
           "parking in the garage was expensive but secure"],
    "h4": ["the bathroom had a deep soaking tub and rain shower",
           "the bar served creative cocktails every evening"],
    "h5": ["the beach was steps away with free umbrellas",
           "the kids club kept our children busy all day"],
    "h6": ["the shuttle to the airport ran every thirty minutes",
           "the restaurant served authentic thai curry"],
    "h7": ["the wifi was slow and kept dropping in the evening",
           "the elevator was old and noisy"],
    "h8": ["the balcony overlooked a quiet garden with fountains",
           "the minibar was stocked with local craft beer"],
}

PAIRS = [("h1", "h2"), ("h3", "h4"), ("h5", "h6"), ("h7", "h8")]
REVIEWS_PER_ENTITY = 8


def review_text(rng, entity):
    shared = rng.sample(SHARED, 3)
    specific = [rng.choice(SPECIFIC[entity])]
    sentences = shared + specific
    rng.shuffle(sentences)
    return " . ".join(sentences) + " ."


def main():
    rng = random.Random(20221)
    root = pathlib.Path(__file__).resolve().parent.parent / "data" / "sample"
    root.mkdir(parents=True, exist_ok=True)

    with open(root / "reviews.jsonl", "w") as out:
        for a, b in PAIRS:
            for entity in (a, b):
                for i in range(REVIEWS_PER_ENTITY):
                    record = {"entity_id": entity,
                              "review_id": f"{entity}-r{i:02d}",
                              "text": review_text(rng, entity)}
                    out.write(json.dumps(record, sort_keys=True) + "\n")

    with open(root / "references.jsonl", "w") as out:
        for a, b in PAIRS:
            record = {
                "pair_id": f"{a},{b}",
                "contrastive_a": [" . ".join(SPECIFIC[a]) + " ."],
                "contrastive_b": [" . ".join(SPECIFIC[b]) + " ."],
                "common": [" . ".join(SHARED[:3]) + " ."],
            }
            out.write(json.dumps(record, sort_keys=True) + "\n")

    with open(root / "pairs.txt", "w") as out:
        for a, b in PAIRS:
            out.write(f"{a},{b}\n")


if __name__ == "__main__":
    main()
