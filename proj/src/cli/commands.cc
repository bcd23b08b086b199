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

#include <algorithm>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ssg/cli.h"
#include "ssg/corpus_io.h"
#include "ssg/error.h"
#include "ssg/file_util.h"
#include "ssg/parallel.h"
#include "ssg/preprocess.h"
#include "ssg/report_io.h"

namespace ssg::cli {

namespace {

// Writes `content` to config.output when set, otherwise to `out`.
void Emit(const RunConfig& config, const std::string& content,
          std::ostream& out) {
  if (config.output.empty()) {
    out << content;
  } else {
    WriteFileAtomically(config.output, content);
  }
}

std::string SafeFileName(std::string_view id) {
  std::string name;
  for (const char c : id) {
    const bool plain = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                       (c >= '0' && c <= '9') || c == '-' || c == '_' ||
                       c == '.' || (static_cast<unsigned char>(c) >= 0x80);
    name.push_back(plain ? c : '_');
  }
  if (name.empty() || name.front() == '.') name.insert(name.begin(), '_');
  return name;
}

template <typename Fn>
int Guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace

int CmdPreprocess(const RunConfig& config,
                  const std::filesystem::path& raw_dir, std::ostream& out,
                  std::ostream& err) {
  return Guarded(err, [&] {
    const LemmaDictionary dict = config.lemmas.empty()
                                     ? LemmaDictionary()
                                     : LemmaDictionary::LoadFile(config.lemmas);
    const StopwordList stops = config.stopwords.empty()
                                   ? StopwordList()
                                   : StopwordList::LoadFile(config.stopwords);

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(raw_dir)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
      return a.filename().string() < b.filename().string();
    });

    std::vector<std::optional<Document>> docs(files.size());
    std::vector<std::string> failures(files.size());
    ParallelFor(files.size(), config.jobs, [&](std::size_t i) {
      try {
        docs[i] = BuildDocument(files[i].stem().string(), ReadFile(files[i]),
                                dict, stops);
      } catch (const Error& e) {
        failures[i] = e.what();
      }
    });

    std::ostringstream corpus;
    std::size_t written = 0;
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (docs[i]) {
        corpus << DocumentToJsonLine(*docs[i]) << '\n';
        ++written;
      } else {
        err << fmt::format("skipped {}: {}\n", files[i].filename().string(),
                           failures[i]);
      }
    }
    if (written == 0) {
      err << fmt::format("no document could be built from '{}'\n",
                         raw_dir.string());
      return 1;
    }
    Emit(config, corpus.str(), out);
    if (!config.output.empty()) {
      out << fmt::format("wrote {} of {} documents to {}\n", written,
                         files.size(), config.output.string());
    }
    return 0;
  });
}

int CmdScore(const RunConfig& config,
             const std::optional<std::filesystem::path>& dump_dir,
             std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    Corpus corpus = LoadScoringCorpus(config);
    if (corpus.empty()) {
      throw Error(ErrorCode::kEmptyEligibleSet, "corpus has no documents");
    }
    std::sort(corpus.begin(), corpus.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    if (dump_dir) std::filesystem::create_directories(*dump_dir);

    std::vector<std::pair<std::string, double>> scores(corpus.size());
    ParallelFor(corpus.size(), config.jobs, [&](std::size_t i) {
      const CoherenceGraph graph =
          BuildGraph(corpus[i], config.approach, config.params);
      scores[i] = {corpus[i].id, CoherenceScore(graph)};
      if (dump_dir) {
        std::ostringstream dump;
        WriteGraphDump(dump, graph);
        WriteFileAtomically(*dump_dir / (SafeFileName(corpus[i].id) + ".graph"),
                            dump.str());
      }
    });

    std::ostringstream text;
    WriteScores(text, scores);
    out << text.str();
    if (!config.output.empty()) WriteFileAtomically(config.output, text.str());
    return 0;
  });
}

int CmdTask(const RunConfig& config, Task task, std::ostream& out,
            std::ostream& err) {
  return Guarded(err, [&] {
    const Corpus corpus = LoadScoringCorpus(config);
    const EvalOptions options{config.permutations, config.seed, config.jobs};
    const TaskReport report =
        RunTask(corpus, task, config.approach, config.params, options);
    std::ostringstream text;
    WriteReportJsonl(text, report);
    Emit(config, text.str(), out);
    if (!config.output.empty()) {
      out << fmt::format("{} {} accuracy={} trials={} skipped={}\n",
                         TaskName(task), ApproachName(config.approach),
                         report.accuracy, report.trials.size(),
                         report.skipped.size());
    }
    return 0;
  });
}

int CmdSweep(const RunConfig& config, Task task,
             const std::vector<double>& grid, std::ostream& out,
             std::ostream& err) {
  return Guarded(err, [&] {
    if (config.approach == Approach::kSsv) {
      throw Error(ErrorCode::kUnsupportedApproach,
                  "SSV has no tunable parameter to sweep");
    }
    const Corpus corpus = LoadScoringCorpus(config);
    const EvalOptions options{config.permutations, config.seed, config.jobs};
    const auto rows =
        Sweep(corpus, config.approach, task, grid, config.params, options);
    std::ostringstream text;
    WriteSweepCsv(text, rows);
    Emit(config, text.str(), out);
    return 0;
  });
}

int CmdGenerate(const SyntheticOptions& options,
                const std::filesystem::path& out_dir, std::ostream& out,
                std::ostream& err) {
  return Guarded(err, [&] {
    const SyntheticCorpus synth = GenerateSyntheticCorpus(options);
    std::filesystem::create_directories(out_dir);
    std::ostringstream corpus;
    WriteCorpus(corpus, synth.corpus);
    std::ostringstream vectors;
    synth.store.Write(vectors);
    WriteFileAtomically(out_dir / "corpus.jsonl", corpus.str());
    WriteFileAtomically(out_dir / "vectors.txt", vectors.str());
    out << fmt::format("wrote {} documents, {} words to {}\n",
                       synth.corpus.size(), synth.store.size(),
                       out_dir.string());
    return 0;
  });
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Text coherence scoring with semantic similarity graphs", "ssg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Key-value config file; flags override it");

  RunConfig config;
  std::string approach = "MSV";
  std::string oov = "skip";
  app.add_option("--approach", approach, "PAV, SSV or MSV")
      ->capture_default_str();
  app.add_option("--alpha", config.params.alpha,
                 "Entity-overlap weight for PAV, in [0, 1]")
      ->capture_default_str();
  app.add_option("--theta", config.params.theta,
                 "Edge threshold for MSV, >= 0")
      ->capture_default_str();
  app.add_option("--oov", oov, "Out-of-vocabulary policy: skip or random")
      ->capture_default_str();
  app.add_option("--permutations", config.permutations,
                 "Shuffles per document for ddt")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for all randomness")
      ->capture_default_str();
  app.add_option("--jobs", config.jobs, "Worker threads")
      ->capture_default_str();
  app.add_option("--corpus", config.corpus, "Canonical corpus (JSON Lines)");
  app.add_option("--embeddings", config.embeddings,
                 "Word vectors, word2vec text format");
  app.add_option("--sentence-vectors", config.sentence_vectors,
                 "Precomputed sentence vectors; overrides --embeddings");
  app.add_flag("--include-stopwords", config.include_stopwords,
               "Average stopword vectors too");
  app.add_option("--stopwords", config.stopwords, "Stopword list");
  app.add_option("--lemmas", config.lemmas, "Lemma dictionary (surface<TAB>lemma)");
  app.add_option("-o,--output", config.output, "Output file (default stdout)");

  auto* preprocess = app.add_subcommand(
      "preprocess", "Build a canonical corpus from a directory of text files");
  std::filesystem::path raw_dir;
  preprocess->add_option("input_dir", raw_dir, "One document per file")
      ->required()
      ->check(CLI::ExistingDirectory);

  auto* score = app.add_subcommand("score", "Print coherence per document");
  std::optional<std::filesystem::path> dump_dir;
  score->add_option("--dump-graph", dump_dir,
                    "Directory for one <doc_id>.graph dump per document");

  auto* ddt = app.add_subcommand("ddt", "Document discrimination task");
  auto* it = app.add_subcommand("it", "Insertion task");

  auto* sweep = app.add_subcommand("sweep", "Accuracy over a parameter grid");
  std::string task_name = "ddt";
  std::string grid_spec = "0:1:0.1";
  sweep->add_option("--task", task_name, "ddt or it")->capture_default_str();
  sweep->add_option("--grid", grid_spec,
                    "start:stop:step or comma-separated values")
      ->capture_default_str();

  auto* generate = app.add_subcommand(
      "generate", "Write a synthetic planted-coherence corpus");
  SyntheticOptions synth;
  std::filesystem::path out_dir;
  generate->add_option("--out-dir", out_dir, "Destination directory")
      ->required();
  generate->add_option("--docs", synth.n_docs)->capture_default_str();
  generate->add_option("--min-sentences", synth.min_sentences)
      ->capture_default_str();
  generate->add_option("--max-sentences", synth.max_sentences)
      ->capture_default_str();
  generate->add_option("--dimension", synth.dimension)->capture_default_str();
  generate->add_option("--filler-vocab", synth.filler_vocab)
      ->capture_default_str();
  generate->add_option("--fillers", synth.fillers_per_sentence)
      ->capture_default_str();
  generate->add_option("--drift", synth.drift)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const auto parsed_approach = ParseApproach(approach);
  if (!parsed_approach) {
    err << fmt::format("ConfigError: approach: unknown value '{}'\n", approach);
    return 1;
  }
  config.approach = *parsed_approach;
  const auto parsed_oov = ParseOovPolicy(oov);
  if (!parsed_oov) {
    err << fmt::format("ConfigError: oov: unknown value '{}'\n", oov);
    return 1;
  }
  config.oov = *parsed_oov;

  if (*preprocess) return CmdPreprocess(config, raw_dir, out, err);
  if (*score) return CmdScore(config, dump_dir, out, err);
  if (*ddt) return CmdTask(config, Task::kDdt, out, err);
  if (*it) return CmdTask(config, Task::kIt, out, err);
  if (*generate) {
    synth.seed = config.seed;
    return CmdGenerate(synth, out_dir, out, err);
  }
  const auto task = ParseTask(task_name);
  if (!task) {
    err << fmt::format("ConfigError: task: unknown value '{}'\n", task_name);
    return 1;
  }
  return Guarded(err, [&] {
    return CmdSweep(config, *task, ParseGrid(grid_spec), out, err);
  });
}

}  // namespace ssg::cli
