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

#ifndef SSG_GRAPH_H_
#define SSG_GRAPH_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/document.h"
#include "ssg/similarity.h"

namespace ssg {

// Graph construction strategies:
//   kPav  edge to the nearest preceding sentence with positive SimMixed
//   kSsv  single edge to the sentence with the largest distance-weighted
//         cosine
//   kMsv  edges to every sentence whose distance-weighted cosine exceeds
//         theta
enum class Approach { kPav, kSsv, kMsv };

std::string_view ApproachName(Approach approach);
std::optional<Approach> ParseApproach(std::string_view name);

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct CoherenceGraph {
  std::size_t n_vertices = 0;
  std::vector<Edge> edges;  // sorted by (from, to)
  Approach approach = Approach::kMsv;
  SimilarityParams params;
};

// Builders read the vectors attached to the document's sentences.
CoherenceGraph BuildPav(const Document& doc, double alpha);
CoherenceGraph BuildSsv(const Document& doc);
CoherenceGraph BuildMsv(const Document& doc, double theta);
CoherenceGraph BuildGraph(const Document& doc, Approach approach,
                          const SimilarityParams& params);

// Mean over all vertices of the mean outgoing edge weight. Vertices without
// outgoing edges contribute 0 and still count.
double CoherenceScore(const CoherenceGraph& graph);

double ScoreDocument(const Document& doc, Approach approach,
                     const SimilarityParams& params);

// Describes the first structural invariant the graph breaks, if any.
std::optional<std::string> CheckGraphInvariants(const CoherenceGraph& graph);

// Debug dump: '#' header lines with n_vertices, approach, alpha, theta,
// followed by one "from to weight" line per edge.
void WriteGraphDump(std::ostream& out, const CoherenceGraph& graph);

}  // namespace ssg

#endif  // SSG_GRAPH_H_
