// Copyright 2026 The SSG Coherence Authors.
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

#include "test_support.h"

#include <algorithm>
#include <limits>
#include <map>

#include "ssg/preprocess.h"
#include "ssg/similarity.h"

namespace ssg::testing {

Sentence MakeSentence(std::vector<std::string> entities,
                      std::optional<Vector> vector) {
  Sentence sentence;
  for (auto& lemma : entities) sentence.tokens.push_back({lemma, lemma, false});
  sentence.entities = ExtractEntities(sentence.tokens);
  sentence.vector = std::move(vector);
  return sentence;
}

Document MakeDocument(std::string id, std::vector<Sentence> sentences) {
  Document doc;
  doc.id = std::move(id);
  doc.sentences = std::move(sentences);
  RepackIndices(doc);
  return doc;
}

Document VectorDocument(std::initializer_list<Vector> vectors) {
  std::vector<Sentence> sentences;
  for (const auto& v : vectors) sentences.push_back(MakeSentence({}, v));
  return MakeDocument("vec", std::move(sentences));
}

Document RandomDocument(Rng& rng, const RandomDocOptions& options,
                        std::string id) {
  const std::size_t n =
      options.min_sentences +
      static_cast<std::size_t>(
          rng.Below(options.max_sentences - options.min_sentences + 1));
  std::vector<Sentence> sentences;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> entities;
    const auto count = rng.Below(5);
    for (std::uint64_t k = 0; k < count; ++k) {
      entities.push_back("e" + std::to_string(rng.Below(options.vocabulary)));
    }
    std::optional<Vector> vector;
    const double roll = rng.Uniform();
    if (roll >= options.absent_probability) {
      Vector v(options.dimension, 0.0);
      if (roll >= options.absent_probability + options.zero_probability) {
        for (auto& x : v) {
          x = options.integer_components
                  ? static_cast<double>(rng.Below(3)) - 1.0
                  : rng.Normal();
        }
      }
      vector = std::move(v);
    }
    sentences.push_back(MakeSentence(std::move(entities), std::move(vector)));
  }
  return MakeDocument(std::move(id), std::move(sentences));
}

std::vector<Edge> BruteForceMsv(const Document& doc, double theta) {
  std::vector<Edge> edges;
  for (const auto& a : doc.sentences) {
    for (const auto& b : doc.sentences) {
      if (a.index == b.index) continue;
      const double w = SimDistanceWeighted(a, b);
      if (w > theta) edges.push_back({a.index, b.index, w});
    }
  }
  return edges;
}

std::vector<Edge> BruteForceSsv(const Document& doc) {
  std::vector<Edge> edges;
  const std::size_t n = doc.size();
  for (std::size_t i = 0; i < n; ++i) {
    // Collect every candidate, then pick by (weight desc, distance asc,
    // index asc).
    struct Candidate {
      double weight;
      std::size_t distance;
      std::size_t j;
    };
    std::vector<Candidate> candidates;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      candidates.push_back({SimDistanceWeighted(doc.sentences[i],
                                                doc.sentences[j]),
                            i > j ? i - j : j - i, j});
    }
    if (candidates.empty()) continue;
    const auto best = std::min_element(
        candidates.begin(), candidates.end(),
        [](const Candidate& a, const Candidate& b) {
          if (a.weight != b.weight) return a.weight > b.weight;
          if (a.distance != b.distance) return a.distance < b.distance;
          return a.j < b.j;
        });
    if (best->weight > 0.0) edges.push_back({i, best->j, best->weight});
  }
  return edges;
}

std::vector<Edge> BruteForcePav(const Document& doc, double alpha) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < doc.size(); ++i) {
    for (std::size_t back = 1; back <= i; ++back) {
      const double sim =
          SimMixed(doc.sentences[i], doc.sentences[i - back], alpha);
      if (sim > 0.0) {
        edges.push_back({i, i - back, sim});
        break;
      }
    }
  }
  return edges;
}

double BruteForceScore(std::size_t n_vertices, const std::vector<Edge>& edges) {
  std::map<std::size_t, std::vector<double>> outgoing;
  for (const auto& e : edges) outgoing[e.from].push_back(e.weight);
  double total = 0.0;
  for (std::size_t v = 0; v < n_vertices; ++v) {
    const auto it = outgoing.find(v);
    if (it == outgoing.end()) continue;
    double sum = 0.0;
    for (const double w : it->second) sum += w;
    total += sum / static_cast<double>(it->second.size());
  }
  return total / static_cast<double>(n_vertices);
}

}  // namespace ssg::testing
