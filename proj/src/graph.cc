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

#include "ssg/graph.h"

#include <algorithm>
#include <set>
#include <span>
#include <utility>

#include <fmt/format.h>

#include "ssg/embeddings.h"
#include "ssg/unicode.h"

namespace ssg {

namespace {

// Sentence vectors and their norms, computed once per build.
class VectorCache {
 public:
  explicit VectorCache(const Document& doc) {
    vectors_.reserve(doc.size());
    norms_.reserve(doc.size());
    for (const auto& sentence : doc.sentences) {
      if (sentence.vector) {
        vectors_.emplace_back(*sentence.vector);
        norms_.push_back(Norm(*sentence.vector));
      } else {
        vectors_.emplace_back();
        norms_.push_back(0.0);
      }
    }
  }

  double Cosine(std::size_t i, std::size_t j) const {
    if (vectors_[i].empty() || vectors_[j].empty()) return 0.0;
    return CosineClampedWithNorms(vectors_[i], vectors_[j], norms_[i],
                                  norms_[j]);
  }

  double DistanceWeighted(std::size_t i, std::size_t j) const {
    const std::size_t distance = i > j ? i - j : j - i;
    return Cosine(i, j) / static_cast<double>(distance);
  }

 private:
  std::vector<std::span<const double>> vectors_;
  std::vector<double> norms_;
};

// Symmetric N x N table of distance-weighted cosines; diagonal unused.
std::vector<double> DistanceWeightedTable(const Document& doc) {
  const std::size_t n = doc.size();
  const VectorCache cache(doc);
  std::vector<double> table(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = cache.DistanceWeighted(i, j);
      table[i * n + j] = w;
      table[j * n + i] = w;
    }
  }
  return table;
}

CoherenceGraph EmptyGraph(const Document& doc, Approach approach,
                          SimilarityParams params) {
  CoherenceGraph graph;
  graph.n_vertices = doc.size();
  graph.approach = approach;
  graph.params = params;
  return graph;
}

bool EdgeOrder(const Edge& a, const Edge& b) {
  return std::pair(a.from, a.to) < std::pair(b.from, b.to);
}

}  // namespace

std::string_view ApproachName(Approach approach) {
  switch (approach) {
    case Approach::kPav: return "PAV";
    case Approach::kSsv: return "SSV";
    case Approach::kMsv: return "MSV";
  }
  return "?";
}

std::optional<Approach> ParseApproach(std::string_view name) {
  const std::string lowered = unicode::ToLower(name);
  if (lowered == "pav") return Approach::kPav;
  if (lowered == "ssv") return Approach::kSsv;
  if (lowered == "msv") return Approach::kMsv;
  return std::nullopt;
}

CoherenceGraph BuildPav(const Document& doc, double alpha) {
  SimilarityParams params;
  params.alpha = alpha;
  CoherenceGraph graph = EmptyGraph(doc, Approach::kPav, params);
  const VectorCache cache(doc);
  for (std::size_t i = 1; i < doc.size(); ++i) {
    for (std::size_t j = i; j-- > 0;) {
      const double sim =
          alpha * Uot(doc.sentences[i].entities, doc.sentences[j].entities) +
          (1.0 - alpha) * cache.Cosine(i, j);
      if (sim > 0.0) {
        graph.edges.push_back({i, j, sim});
        break;
      }
    }
  }
  return graph;
}

CoherenceGraph BuildSsv(const Document& doc) {
  CoherenceGraph graph = EmptyGraph(doc, Approach::kSsv, {});
  const std::size_t n = doc.size();
  const auto table = DistanceWeightedTable(doc);
  for (std::size_t i = 0; i < n; ++i) {
    double best = 0.0;
    std::size_t best_j = n;
    std::size_t best_distance = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double w = table[i * n + j];
      const std::size_t distance = i > j ? i - j : j - i;
      // j ascends, so on equal weight and distance the lower j is kept.
      if (best_j == n || w > best ||
          (w == best && distance < best_distance)) {
        best = w;
        best_j = j;
        best_distance = distance;
      }
    }
    if (best_j < n && best > 0.0) graph.edges.push_back({i, best_j, best});
  }
  return graph;
}

CoherenceGraph BuildMsv(const Document& doc, double theta) {
  SimilarityParams params;
  params.theta = theta;
  CoherenceGraph graph = EmptyGraph(doc, Approach::kMsv, params);
  const std::size_t n = doc.size();
  const auto table = DistanceWeightedTable(doc);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double w = table[i * n + j];
      if (w > theta) graph.edges.push_back({i, j, w});
    }
  }
  return graph;
}

CoherenceGraph BuildGraph(const Document& doc, Approach approach,
                          const SimilarityParams& params) {
  CoherenceGraph graph;
  switch (approach) {
    case Approach::kPav: graph = BuildPav(doc, params.alpha); break;
    case Approach::kSsv: graph = BuildSsv(doc); break;
    case Approach::kMsv: graph = BuildMsv(doc, params.theta); break;
  }
  graph.params = params;
  return graph;
}

double CoherenceScore(const CoherenceGraph& graph) {
  if (graph.n_vertices == 0) return 0.0;
  std::span<const Edge> edges = graph.edges;
  std::vector<Edge> sorted;
  if (!std::is_sorted(edges.begin(), edges.end(), EdgeOrder)) {
    sorted.assign(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end(), EdgeOrder);
    edges = sorted;
  }
  double total = 0.0;
  std::size_t k = 0;
  while (k < edges.size()) {
    const std::size_t from = edges[k].from;
    double sum = 0.0;
    std::size_t out_degree = 0;
    for (; k < edges.size() && edges[k].from == from; ++k) {
      sum += edges[k].weight;
      ++out_degree;
    }
    total += sum / static_cast<double>(out_degree);
  }
  return total / static_cast<double>(graph.n_vertices);
}

double ScoreDocument(const Document& doc, Approach approach,
                     const SimilarityParams& params) {
  return CoherenceScore(BuildGraph(doc, approach, params));
}

std::optional<std::string> CheckGraphInvariants(const CoherenceGraph& graph) {
  if (graph.n_vertices == 0) return "graph has no vertices";
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::size_t> out_degree(graph.n_vertices, 0);
  for (const auto& e : graph.edges) {
    if (e.from >= graph.n_vertices || e.to >= graph.n_vertices) {
      return fmt::format("edge {}->{} out of range", e.from, e.to);
    }
    if (e.from == e.to) return fmt::format("self-loop at {}", e.from);
    if (!(e.weight >= 0.0)) {
      return fmt::format("edge {}->{} has negative weight", e.from, e.to);
    }
    if (!seen.emplace(e.from, e.to).second) {
      return fmt::format("duplicate edge {}->{}", e.from, e.to);
    }
    ++out_degree[e.from];
    if (graph.approach == Approach::kPav && e.to >= e.from) {
      return fmt::format("PAV edge {}->{} does not point backwards", e.from,
                         e.to);
    }
    if (graph.approach == Approach::kMsv && !(e.weight > graph.params.theta)) {
      return fmt::format("MSV edge {}->{} weight {} not above theta {}",
                         e.from, e.to, e.weight, graph.params.theta);
    }
  }
  if (graph.approach != Approach::kMsv) {
    for (std::size_t v = 0; v < graph.n_vertices; ++v) {
      if (out_degree[v] > 1) {
        return fmt::format("vertex {} has out-degree {}", v, out_degree[v]);
      }
    }
  }
  return std::nullopt;
}

void WriteGraphDump(std::ostream& out, const CoherenceGraph& graph) {
  out << fmt::format("# n_vertices {}\n# approach {}\n# alpha {}\n# theta {}\n",
                     graph.n_vertices, ApproachName(graph.approach),
                     graph.params.alpha, graph.params.theta);
  for (const auto& e : graph.edges) {
    out << fmt::format("{} {} {}\n", e.from, e.to, e.weight);
  }
}

}  // namespace ssg
