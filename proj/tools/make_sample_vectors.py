#!/usr/bin/env python3
# Copyright 2026 The SSG Coherence Authors.
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
"""Writes toy topic-clustered word vectors for the sample corpus.

Every document gets a random topic direction; a word's vector is the mean of
the topics of the documents it occurs in plus Gaussian noise. Latin-script
words are left out so the sample exercises the out-of-vocabulary path.
"""

import argparse
import json

import numpy as np


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("corpus")
    parser.add_argument("output")
    parser.add_argument("--dim", type=int, default=50)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--noise", type=float, default=0.6)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    docs = [json.loads(line) for line in open(args.corpus, encoding="utf-8")]
    topics = rng.standard_normal((len(docs), args.dim))
    topics /= np.linalg.norm(topics, axis=1, keepdims=True)

    occurrences = {}
    for d, doc in enumerate(docs):
        for sentence in doc["sentences"]:
            for _surface, lemma, stop in sentence:
                if stop or lemma.isascii():
                    continue
                occurrences.setdefault(lemma, set()).add(d)

    with open(args.output, "w", encoding="utf-8") as out:
        out.write(f"{len(occurrences)} {args.dim}\n")
        for lemma in sorted(occurrences):
            base = topics[sorted(occurrences[lemma])].mean(axis=0)
            vec = base + args.noise * rng.standard_normal(args.dim) / np.sqrt(args.dim)
            out.write(lemma + " " + " ".join(f"{x:.5f}" for x in vec) + "\n")


if __name__ == "__main__":
    main()
