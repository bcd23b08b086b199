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

#include "ssg/evaluation.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "ssg/error.h"
#include "ssg/parallel.h"
#include "ssg/random.h"
#include "ssg/unicode.h"

namespace ssg {

namespace {

// Stream tag for the insertion-task removal draw.
constexpr std::uint64_t kRemovalStream = 0x49542D72656D6F76ULL;

std::vector<const Document*> EligibleSorted(std::span<const Document> corpus,
                                            std::size_t min_sentences,
                                            std::vector<std::string>& skipped) {
  std::vector<const Document*> eligible;
  for (const auto& doc : corpus) {
    if (doc.size() >= min_sentences) {
      eligible.push_back(&doc);
    } else {
      skipped.push_back(doc.id);
    }
  }
  auto by_id = [](const Document* a, const Document* b) { return a->id < b->id; };
  std::sort(eligible.begin(), eligible.end(), by_id);
  std::sort(skipped.begin(), skipped.end());
  return eligible;
}

void FinishReport(TaskReport& report) {
  report.accuracy = static_cast<double>(report.correct_count()) /
                    static_cast<double>(report.trials.size());
}

[[noreturn]] void ThrowEmptyEligible(Task task, std::size_t min_sentences) {
  throw Error(ErrorCode::kEmptyEligibleSet,
              fmt::format("{}: no document has at least {} sentences",
                          TaskName(task), min_sentences));
}

double ParseDouble(std::string_view text) {
  text = unicode::Trim(text);
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end ||
      !std::isfinite(value)) {
    throw Error(ErrorCode::kConfigError,
                fmt::format("grid: '{}' is not a number", text));
  }
  return value;
}

double RoundGridValue(double value) {
  return std::round(value * 1e12) / 1e12;
}

}  // namespace

std::string_view TaskName(Task task) {
  return task == Task::kDdt ? "DDT" : "IT";
}

std::optional<Task> ParseTask(std::string_view name) {
  const std::string lowered = unicode::ToLower(name);
  if (lowered == "ddt") return Task::kDdt;
  if (lowered == "it" || lowered == "insertion") return Task::kIt;
  return std::nullopt;
}

std::size_t TaskReport::correct_count() const {
  return static_cast<std::size_t>(std::count_if(
      trials.begin(), trials.end(), [](const auto& t) { return t.correct; }));
}

Document PermuteDocument(const Document& doc, std::uint64_t seed) {
  const std::size_t n = doc.size();
  if (n < 2) {
    throw Error(ErrorCode::kTooShort,
                fmt::format("document '{}' has {} sentence(s); permutation "
                            "needs at least 2", doc.id, n));
  }
  Rng rng(seed);
  std::vector<std::size_t> order(n);
  auto is_identity = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      if (order[i] != i) return false;
    }
    return true;
  };
  do {
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.Shuffle(std::span(order));
  } while (is_identity());

  Document out;
  out.id = doc.id;
  out.sentences.reserve(n);
  for (const std::size_t k : order) out.sentences.push_back(doc.sentences[k]);
  RepackIndices(out);
  return out;
}

std::size_t InsertionRemovalIndex(const Document& doc, std::uint64_t seed) {
  Rng rng(DeriveSeed(seed, HashString(doc.id), kRemovalStream));
  return static_cast<std::size_t>(rng.Below(doc.size()));
}

std::vector<Document> InsertionVariants(const Document& doc,
                                        std::size_t removed) {
  const std::size_t n = doc.size();
  std::vector<Sentence> rest;
  rest.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != removed) rest.push_back(doc.sentences[i]);
  }
  std::vector<Document> variants;
  variants.reserve(n);
  for (std::size_t position = 0; position < n; ++position) {
    Document variant;
    variant.id = doc.id;
    variant.sentences.reserve(n);
    variant.sentences.insert(variant.sentences.end(), rest.begin(),
                             rest.begin() + static_cast<std::ptrdiff_t>(position));
    variant.sentences.push_back(doc.sentences[removed]);
    variant.sentences.insert(variant.sentences.end(),
                             rest.begin() + static_cast<std::ptrdiff_t>(position),
                             rest.end());
    RepackIndices(variant);
    variants.push_back(std::move(variant));
  }
  return variants;
}

TaskReport RunDdt(std::span<const Document> corpus, Approach approach,
                  const SimilarityParams& params, const EvalOptions& options) {
  params.Validate();
  if (options.permutations_per_doc == 0) {
    throw Error(ErrorCode::kConfigError, "permutations must be >= 1");
  }
  TaskReport report;
  report.task = Task::kDdt;
  report.approach = approach;
  report.params = params;
  report.seed = options.seed;
  report.permutations_per_doc = options.permutations_per_doc;
  const auto eligible = EligibleSorted(corpus, 2, report.skipped);
  if (eligible.empty()) ThrowEmptyEligible(Task::kDdt, 2);

  const std::size_t k = options.permutations_per_doc;
  std::vector<TrialOutcome> slots(eligible.size() * k);
  ParallelFor(eligible.size(), options.jobs, [&](std::size_t d) {
    const Document& doc = *eligible[d];
    const double original = ScoreDocument(doc, approach, params);
    const std::uint64_t doc_key = HashString(doc.id);
    for (std::size_t t = 0; t < k; ++t) {
      const Document shuffled =
          PermuteDocument(doc, DeriveSeed(options.seed, doc_key, t));
      const double competitor = ScoreDocument(shuffled, approach, params);
      TrialOutcome& out = slots[d * k + t];
      out.doc_id = doc.id;
      out.trial = t;
      out.original_score = original;
      out.competitor_score = competitor;
      out.correct = original > competitor;
    }
  });
  report.trials = std::move(slots);
  FinishReport(report);
  return report;
}

TaskReport RunInsertion(std::span<const Document> corpus, Approach approach,
                        const SimilarityParams& params,
                        const EvalOptions& options) {
  params.Validate();
  TaskReport report;
  report.task = Task::kIt;
  report.approach = approach;
  report.params = params;
  report.seed = options.seed;
  const auto eligible = EligibleSorted(corpus, 3, report.skipped);
  if (eligible.empty()) ThrowEmptyEligible(Task::kIt, 3);

  std::vector<TrialOutcome> slots(eligible.size());
  ParallelFor(eligible.size(), options.jobs, [&](std::size_t d) {
    const Document& doc = *eligible[d];
    const std::size_t removed = InsertionRemovalIndex(doc, options.seed);
    const auto variants = InsertionVariants(doc, removed);
    std::vector<double> scores;
    scores.reserve(variants.size());
    for (const auto& variant : variants) {
      scores.push_back(ScoreDocument(variant, approach, params));
    }
    const auto best = std::max_element(scores.begin(), scores.end());
    const auto best_count = std::count(scores.begin(), scores.end(), *best);

    double competitor = 0.0;
    bool have_competitor = false;
    for (std::size_t p = 0; p < scores.size(); ++p) {
      if (p == removed) continue;
      if (!have_competitor || scores[p] > competitor) competitor = scores[p];
      have_competitor = true;
    }

    TrialOutcome& out = slots[d];
    out.doc_id = doc.id;
    out.trial = 0;
    out.original_score = scores[removed];
    out.competitor_score = competitor;
    out.removed_index = removed;
    out.chosen_position =
        static_cast<std::size_t>(best - scores.begin());
    out.correct = best_count == 1 && *out.chosen_position == removed;
  });
  report.trials = std::move(slots);
  FinishReport(report);
  return report;
}

TaskReport RunDdt(Corpus corpus, Approach approach,
                  const SimilarityParams& params,
                  const SentenceVectorSource& source,
                  const EvalOptions& options) {
  AttachVectors(corpus, source);
  return RunDdt(std::span<const Document>(corpus), approach, params, options);
}

TaskReport RunInsertion(Corpus corpus, Approach approach,
                        const SimilarityParams& params,
                        const SentenceVectorSource& source,
                        const EvalOptions& options) {
  AttachVectors(corpus, source);
  return RunInsertion(std::span<const Document>(corpus), approach, params,
                      options);
}

TaskReport RunTask(std::span<const Document> corpus, Task task,
                   Approach approach, const SimilarityParams& params,
                   const EvalOptions& options) {
  return task == Task::kDdt ? RunDdt(corpus, approach, params, options)
                            : RunInsertion(corpus, approach, params, options);
}

std::vector<SweepRow> Sweep(std::span<const Document> corpus,
                            Approach approach, Task task,
                            std::span<const double> grid,
                            const SimilarityParams& base_params,
                            const EvalOptions& options) {
  if (approach == Approach::kSsv) {
    throw Error(ErrorCode::kUnsupportedApproach,
                "SSV has no tunable parameter to sweep");
  }
  if (grid.empty()) throw Error(ErrorCode::kConfigError, "grid is empty");
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const double value : grid) {
    SimilarityParams params = base_params;
    (approach == Approach::kPav ? params.alpha : params.theta) = value;
    const TaskReport report = RunTask(corpus, task, approach, params, options);
    rows.push_back({value, report.accuracy, report.trials.size()});
  }
  return rows;
}

std::vector<double> ParseGrid(std::string_view spec) {
  spec = unicode::Trim(spec);
  if (spec.empty()) throw Error(ErrorCode::kConfigError, "grid is empty");
  std::vector<double> values;
  if (spec.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    std::size_t begin = 0;
    while (true) {
      const std::size_t colon = spec.find(':', begin);
      parts.push_back(ParseDouble(spec.substr(begin, colon - begin)));
      if (colon == std::string_view::npos) break;
      begin = colon + 1;
    }
    if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
      throw Error(ErrorCode::kConfigError,
                  fmt::format("grid: expected 'start:stop:step' with step > 0 "
                              "and stop >= start, got '{}'", spec));
    }
    const auto steps = static_cast<std::size_t>(
        std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
    for (std::size_t k = 0; k <= steps; ++k) {
      values.push_back(
          RoundGridValue(parts[0] + static_cast<double>(k) * parts[2]));
    }
  } else {
    std::size_t begin = 0;
    while (true) {
      const std::size_t comma = spec.find(',', begin);
      values.push_back(ParseDouble(spec.substr(begin, comma - begin)));
      if (comma == std::string_view::npos) break;
      begin = comma + 1;
    }
  }
  return values;
}

}  // namespace ssg
