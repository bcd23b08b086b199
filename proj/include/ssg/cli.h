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

#ifndef SSG_CLI_H_
#define SSG_CLI_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ssg/embeddings.h"
#include "ssg/evaluation.h"
#include "ssg/graph.h"
#include "ssg/similarity.h"
#include "ssg/synthetic.h"

namespace ssg::cli {

struct RunConfig {
  Approach approach = Approach::kMsv;
  SimilarityParams params;
  OovPolicy oov = OovPolicy::kSkip;
  std::size_t permutations = 20;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  bool include_stopwords = false;

  std::filesystem::path corpus;
  std::filesystem::path embeddings;
  std::filesystem::path sentence_vectors;
  std::filesystem::path stopwords;
  std::filesystem::path lemmas;
  std::filesystem::path output;

  // Throws Error(kConfigError) naming the offending field.
  void ValidateParams() const;
  void RequireCorpus() const;
  void RequireVectors() const;
};

// Loads the sentence vector source the config points at: precomputed
// sentence vectors when given, otherwise averaged word embeddings.
SentenceVectorSource LoadVectorSource(const RunConfig& config);

// Reads the corpus and attaches sentence vectors.
Corpus LoadScoringCorpus(const RunConfig& config);

int CmdPreprocess(const RunConfig& config,
                  const std::filesystem::path& raw_dir, std::ostream& out,
                  std::ostream& err);
int CmdScore(const RunConfig& config,
             const std::optional<std::filesystem::path>& dump_dir,
             std::ostream& out, std::ostream& err);
int CmdTask(const RunConfig& config, Task task, std::ostream& out,
            std::ostream& err);
int CmdSweep(const RunConfig& config, Task task,
             const std::vector<double>& grid, std::ostream& out,
             std::ostream& err);
// Writes corpus.jsonl and vectors.txt for a planted-coherence corpus.
int CmdGenerate(const SyntheticOptions& options,
                const std::filesystem::path& out_dir, std::ostream& out,
                std::ostream& err);

// Full command-line entry point; returns the process exit code.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace ssg::cli

#endif  // SSG_CLI_H_
