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

#include "ssg/report_io.h"

#include <fmt/format.h>
#include <json.hpp>

namespace ssg {

using nlohmann::ordered_json;

void WriteReportJsonl(std::ostream& out, const TaskReport& report) {
  for (const auto& trial : report.trials) {
    ordered_json record;
    record["type"] = "trial";
    record["doc_id"] = trial.doc_id;
    record["trial"] = trial.trial;
    record["correct"] = trial.correct;
    record["original_score"] = trial.original_score;
    record["competitor_score"] = trial.competitor_score;
    if (trial.removed_index) record["removed_index"] = *trial.removed_index;
    if (trial.chosen_position) {
      record["chosen_position"] = *trial.chosen_position;
    }
    out << record.dump() << '\n';
  }
  ordered_json summary;
  summary["type"] = "summary";
  summary["task"] = std::string(TaskName(report.task));
  summary["approach"] = std::string(ApproachName(report.approach));
  summary["alpha"] = report.params.alpha;
  summary["theta"] = report.params.theta;
  summary["seed"] = report.seed;
  if (report.task == Task::kDdt) {
    summary["permutations_per_doc"] = report.permutations_per_doc;
  }
  summary["accuracy"] = report.accuracy;
  summary["n_trials"] = report.trials.size();
  summary["n_correct"] = report.correct_count();
  summary["skipped"] = report.skipped;
  out << summary.dump() << '\n';
}

void WriteSweepCsv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "param,accuracy,n_trials\n";
  for (const auto& row : rows) {
    out << fmt::format("{},{},{}\n", row.param, row.accuracy, row.n_trials);
  }
}

void WriteScores(std::ostream& out,
                 std::span<const std::pair<std::string, double>> scores) {
  for (const auto& [id, score] : scores) {
    out << fmt::format("{} {:.6f}\n", id, score);
  }
}

}  // namespace ssg
