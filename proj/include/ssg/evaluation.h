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

#ifndef SSG_EVALUATION_H_
#define SSG_EVALUATION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/document.h"
#include "ssg/embeddings.h"
#include "ssg/graph.h"
#include "ssg/similarity.h"

namespace ssg {

enum class Task { kDdt, kIt };

std::string_view TaskName(Task task);
std::optional<Task> ParseTask(std::string_view name);

struct TrialOutcome {
  std::string doc_id;
  std::size_t trial = 0;
  bool correct = false;
  double original_score = 0.0;
  // DDT: score of the shuffled document. IT: best score among the
  // reinsertion positions other than the original one.
  double competitor_score = 0.0;
  // IT only.
  std::optional<std::size_t> removed_index;
  std::optional<std::size_t> chosen_position;

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

struct TaskReport {
  Task task = Task::kDdt;
  Approach approach = Approach::kMsv;
  SimilarityParams params;
  std::uint64_t seed = 0;
  std::size_t permutations_per_doc = 0;  // DDT only
  double accuracy = 0.0;
  std::vector<TrialOutcome> trials;    // sorted by doc id, then trial
  std::vector<std::string> skipped;    // ids of ineligible documents

  std::size_t correct_count() const;

  friend bool operator==(const TaskReport&, const TaskReport&) = default;
};

struct EvalOptions {
  std::size_t permutations_per_doc = 20;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

// Uniformly random non-identity reordering; indices re-packed 0..N-1 and
// attached vectors travel with their sentences. Throws Error(kTooShort) when
// N < 2.
Document PermuteDocument(const Document& doc, std::uint64_t seed);

// Position (0-based) of the sentence removed for the insertion task.
std::size_t InsertionRemovalIndex(const Document& doc, std::uint64_t seed);

// Documents with `removed` taken out and put back at each of the N
// positions, in position order. Variant `removed` equals the original.
std::vector<Document> InsertionVariants(const Document& doc,
                                        std::size_t removed);

// The corpus must already carry sentence vectors (see AttachVectors).
// Trials compare original against shuffled scores with strict '>'.
// Documents with N < 2 are skipped. Throws Error(kEmptyEligibleSet).
TaskReport RunDdt(std::span<const Document> corpus, Approach approach,
                  const SimilarityParams& params, const EvalOptions& options);

// One trial per document with N >= 3: the original position must be the
// unique best reinsertion point. Throws Error(kEmptyEligibleSet).
TaskReport RunInsertion(std::span<const Document> corpus, Approach approach,
                        const SimilarityParams& params,
                        const EvalOptions& options);

// Convenience overloads that attach vectors from `source` to a copy first.
TaskReport RunDdt(Corpus corpus, Approach approach,
                  const SimilarityParams& params,
                  const SentenceVectorSource& source,
                  const EvalOptions& options);
TaskReport RunInsertion(Corpus corpus, Approach approach,
                        const SimilarityParams& params,
                        const SentenceVectorSource& source,
                        const EvalOptions& options);

TaskReport RunTask(std::span<const Document> corpus, Task task,
                   Approach approach, const SimilarityParams& params,
                   const EvalOptions& options);

struct SweepRow {
  double param = 0.0;
  double accuracy = 0.0;
  std::size_t n_trials = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

// Varies alpha (PAV) or theta (MSV) over `grid` with the same seed at every
// point, so all rows share the same permutations and removals. SSV has no
// parameter and throws Error(kUnsupportedApproach).
std::vector<SweepRow> Sweep(std::span<const Document> corpus,
                            Approach approach, Task task,
                            std::span<const double> grid,
                            const SimilarityParams& base_params,
                            const EvalOptions& options);

// "start:stop:step" (inclusive stop) or a comma-separated list. Values are
// rounded to 12 decimals so "0:1:0.1" yields exactly 0.3 rather than
// 0.30000000000000004. Throws Error(kConfigError).
std::vector<double> ParseGrid(std::string_view spec);

}  // namespace ssg

#endif  // SSG_EVALUATION_H_
