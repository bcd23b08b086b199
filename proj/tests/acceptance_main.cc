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

// Acceptance gate: prints one PASS/FAIL line per criterion and exits
// nonzero when any of them fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "ssg/cli.h"
#include "ssg/corpus_io.h"
#include "ssg/embeddings.h"
#include "ssg/error.h"
#include "ssg/evaluation.h"
#include "ssg/file_util.h"
#include "ssg/graph.h"
#include "ssg/random.h"
#include "test_support.h"

namespace ssg {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

const fs::path kData = SSG_DATA_DIR;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Document> RandomSuite(std::size_t count, std::size_t max_n,
                                  std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Document> docs;
  for (std::size_t k = 0; k < count; ++k) {
    testing::RandomDocOptions options;
    options.max_sentences = max_n;
    // Every other document uses {-1, 0, 1} components to force ties.
    options.integer_components = k % 2 == 1;
    options.dimension = k % 2 == 1 ? 3 : 8;
    docs.push_back(testing::RandomDocument(rng, options, fmt::format("r{}", k)));
  }
  return docs;
}

Verdict RangeInvariant() {
  const auto docs = RandomSuite(1200, 40, 101);
  std::size_t graphs = 0;
  std::size_t violations = 0;
  const auto check = [&](const CoherenceGraph& graph) {
    const double t = CoherenceScore(graph);
    ++graphs;
    if (!(t >= 0.0 && t <= 1.0)) ++violations;
  };
  for (const auto& doc : docs) {
    for (const double alpha : {0.0, 0.5, 1.0}) check(BuildPav(doc, alpha));
    check(BuildSsv(doc));
    for (const double theta : {0.0, 0.3, 0.7}) check(BuildMsv(doc, theta));
  }
  return {violations == 0,
          fmt::format("{} docs, {} graphs, {} violations", docs.size(), graphs,
                      violations)};
}

Verdict OracleEquivalence() {
  const auto docs = RandomSuite(400, 8, 202);
  std::size_t mismatches = 0;
  std::size_t edges = 0;
  for (const auto& doc : docs) {
    const auto ssv = BuildSsv(doc).edges;
    if (ssv != testing::BruteForceSsv(doc)) ++mismatches;
    edges += ssv.size();
    for (const double theta : {0.0, 0.1, 0.25, 0.5, 0.9}) {
      const auto msv = BuildMsv(doc, theta).edges;
      if (msv != testing::BruteForceMsv(doc, theta)) ++mismatches;
      edges += msv.size();
    }
  }
  return {mismatches == 0,
          fmt::format("{} docs (N <= 8), {} edges compared, {} mismatches",
                      docs.size(), edges, mismatches)};
}

Verdict HandExamples() {
  const auto score = [](std::size_t n, std::vector<Edge> edges) {
    CoherenceGraph graph;
    graph.n_vertices = n;
    graph.edges = std::move(edges);
    return CoherenceScore(graph);
  };
  struct Case {
    double got;
    double want;
  };
  const Case cases[] = {
      {score(4, {}), 0.0},
      {score(2, {{0, 1, 1.0}, {1, 0, 1.0}}), 1.0},
      {score(3, {{0, 1, 0.8}, {1, 0, 0.6}, {1, 2, 0.4}}), 1.3 / 3.0},
  };
  double worst = 0.0;
  for (const auto& c : cases) worst = std::max(worst, std::abs(c.got - c.want));
  return {worst <= 1e-12, fmt::format("3 cases, max abs error {:g}", worst)};
}

Verdict MsvMonotonicity() {
  const auto docs = RandomSuite(1200, 40, 303);
  std::size_t violations = 0;
  for (const auto& doc : docs) {
    std::vector<Edge> previous = BuildMsv(doc, 0.0).edges;
    for (int step = 1; step <= 9; ++step) {
      auto current = BuildMsv(doc, step / 10.0).edges;
      // Also require edges(theta2) to be a subset of edges(theta1).
      bool subset = current.size() <= previous.size();
      for (const auto& e : current) {
        subset = subset && std::find(previous.begin(), previous.end(), e) !=
                               previous.end();
      }
      if (!subset) ++violations;
      previous = std::move(current);
    }
  }
  return {violations == 0, fmt::format("{} docs x 10 theta values, {} violations",
                                       docs.size(), violations)};
}

const Corpus& SyntheticCorpus() {
  static const Corpus corpus = [] {
    Corpus c = ReadCorpusFile(kData / "synthetic/corpus.jsonl");
    auto store = std::make_shared<EmbeddingStore>(
        EmbeddingStore::LoadFile(kData / "synthetic/vectors.txt"));
    AttachVectors(c, SentenceVectorSource::AverageWords(store));
    return c;
  }();
  return corpus;
}

constexpr std::uint64_t kDdtSeed = 20200101;

double SyntheticDdt(double theta) {
  return RunDdt(SyntheticCorpus(), Approach::kMsv, {0.8, theta},
                {20, kDdtSeed, 1})
      .accuracy;
}

Verdict PlantedDdt() {
  const auto start = Clock::now();
  const std::size_t docs = SyntheticCorpus().size();
  const double accuracy = SyntheticDdt(0.0);
  const double elapsed = Seconds(start);
  return {docs == 100 && accuracy >= 0.9 && elapsed < 60.0,
          fmt::format("{} docs, MSV theta=0, k=20: accuracy {:.4f} in {:.2f} s",
                      docs, accuracy, elapsed)};
}

Verdict Trend() {
  const double at0 = SyntheticDdt(0.0);
  const double at4 = SyntheticDdt(0.4);
  return {at0 >= at4, fmt::format("theta=0 {:.4f} >= theta=0.4 {:.4f}", at0, at4)};
}

Verdict SweepDeterminism() {
  const fs::path dir = fs::temp_directory_path() / "ssg_acceptance_sweep";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<std::string> csv;
  for (int run = 0; run < 2; ++run) {
    const std::string out = (dir / fmt::format("run{}.csv", run)).string();
    const std::string corpus = (kData / "synthetic/corpus.jsonl").string();
    const std::string vectors = (kData / "synthetic/vectors.txt").string();
    const char* argv[] = {"ssg",  "--corpus", corpus.c_str(), "--embeddings",
                          vectors.c_str(), "--approach", "MSV", "--seed", "99",
                          "--permutations", "5", "-o", out.c_str(), "sweep",
                          "--grid", "0:0.5:0.1"};
    std::ostringstream sink;
    const int code = cli::RunCli(static_cast<int>(std::size(argv)), argv, sink,
                                 sink);
    if (code != 0) return {false, "sweep failed: " + sink.str()};
    csv.push_back(ReadFile(out));
  }
  fs::remove_all(dir);
  const bool same = csv[0] == csv[1] && !csv[0].empty();
  return {same, fmt::format("two runs, {} bytes each, identical: {}",
                            csv[0].size(), same ? "yes" : "no")};
}

Verdict Performance() {
  constexpr std::size_t kSentences = 1000;
  constexpr std::size_t kDim = 300;
  Rng rng(404);
  Document doc;
  doc.id = "long";
  for (std::size_t i = 0; i < kSentences; ++i) {
    Vector v(kDim);
    for (auto& x : v) x = rng.Normal();
    doc.sentences.push_back(testing::MakeSentence({}, std::move(v)));
  }
  RepackIndices(doc);
  const auto start = Clock::now();
  const double score = ScoreDocument(doc, Approach::kMsv, {0.8, 0.0});
  const double elapsed = Seconds(start);
  return {elapsed < 5.0,
          fmt::format("N={} d={} MSV theta=0: {:.3f} s (t_c {:.4f})",
                      kSentences, kDim, elapsed, score)};
}

int Main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"range-invariant", RangeInvariant},
      {"oracle-equivalence", OracleEquivalence},
      {"score-hand-examples", HandExamples},
      {"msv-theta-monotonicity", MsvMonotonicity},
      {"planted-ddt", PlantedDdt},
      {"theta-trend", Trend},
      {"sweep-determinism", SweepDeterminism},
      {"performance", Performance},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict verdict;
    try {
      verdict = run();
    } catch (const std::exception& e) {
      verdict = {false, fmt::format("exception: {}", e.what())};
    }
    if (!verdict.pass) ++failures;
    fmt::print("{} {}: {}\n", verdict.pass ? "PASS" : "FAIL", name,
               verdict.detail);
  }
  std::cout.flush();
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace ssg

int main() { return ssg::Main(); }
