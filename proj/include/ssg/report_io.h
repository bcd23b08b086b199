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

#ifndef SSG_REPORT_IO_H_
#define SSG_REPORT_IO_H_

#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ssg/evaluation.h"

namespace ssg {

// One JSON object per line: a {"type":"trial",...} record per trial, then a
// single {"type":"summary",...} record.
void WriteReportJsonl(std::ostream& out, const TaskReport& report);

// Header "param,accuracy,n_trials", one row per grid point in grid order.
void WriteSweepCsv(std::ostream& out, std::span<const SweepRow> rows);

// "doc_id t_c" lines in the given order; scores printed with six decimals.
void WriteScores(std::ostream& out,
                 std::span<const std::pair<std::string, double>> scores);

}  // namespace ssg

#endif  // SSG_REPORT_IO_H_
