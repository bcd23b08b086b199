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

#ifndef SSG_TESTS_TEST_SUPPORT_H_
#define SSG_TESTS_TEST_SUPPORT_H_

// Document builders, a random document generator, and brute-force oracles
// that re-derive graphs and scores without going through the builders.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ssg/document.h"
#include "ssg/graph.h"
#include "ssg/random.h"

namespace ssg::testing {

// A sentence with the given entity lemmas (one token each) and vector.
Sentence MakeSentence(std::vector<std::string> entities,
                      std::optional<Vector> vector);

Document MakeDocument(std::string id, std::vector<Sentence> sentences);

// Document whose sentences carry only vectors; entity sets are empty.
Document VectorDocument(std::initializer_list<Vector> vectors);

struct RandomDocOptions {
  std::size_t min_sentences = 1;
  std::size_t max_sentences = 40;
  std::size_t dimension = 8;
  std::size_t vocabulary = 12;     // entity lemma pool
  double absent_probability = 0.05;
  double zero_probability = 0.03;
  // Small integer components make exact ties and zero cosines common.
  bool integer_components = false;
};

Document RandomDocument(Rng& rng, const RandomDocOptions& options,
                        std::string id = "rand");

// Oracles. Edge weights come from SimMixed / SimDistanceWeighted evaluated
// pair by pair; selection logic is written out independently.
std::vector<Edge> BruteForceMsv(const Document& doc, double theta);
std::vector<Edge> BruteForceSsv(const Document& doc);
std::vector<Edge> BruteForcePav(const Document& doc, double alpha);

// Coherence score straight from its definition over an unsorted edge list.
double BruteForceScore(std::size_t n_vertices, const std::vector<Edge>& edges);

}  // namespace ssg::testing

#endif  // SSG_TESTS_TEST_SUPPORT_H_
