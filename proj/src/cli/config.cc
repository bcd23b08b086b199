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

#include <memory>

#include <fmt/format.h>

#include "ssg/cli.h"
#include "ssg/corpus_io.h"
#include "ssg/error.h"

namespace ssg::cli {

namespace {

void RequireFile(const std::filesystem::path& path, std::string_view field) {
  if (path.empty()) {
    throw Error(ErrorCode::kConfigError, fmt::format("{}: required", field));
  }
  if (!std::filesystem::is_regular_file(path)) {
    throw Error(ErrorCode::kConfigError,
                fmt::format("{}: file '{}' does not exist", field,
                            path.string()));
  }
}

}  // namespace

void RunConfig::ValidateParams() const {
  if (!(params.alpha >= 0.0 && params.alpha <= 1.0)) {
    throw Error(ErrorCode::kConfigError,
                fmt::format("alpha: must be in [0, 1], got {}", params.alpha));
  }
  if (!(params.theta >= 0.0)) {
    throw Error(ErrorCode::kConfigError,
                fmt::format("theta: must be >= 0, got {}", params.theta));
  }
  if (permutations == 0) {
    throw Error(ErrorCode::kConfigError, "permutations: must be >= 1");
  }
  if (jobs == 0) throw Error(ErrorCode::kConfigError, "jobs: must be >= 1");
}

void RunConfig::RequireCorpus() const { RequireFile(corpus, "corpus"); }

void RunConfig::RequireVectors() const {
  if (!sentence_vectors.empty()) {
    RequireFile(sentence_vectors, "sentence-vectors");
    return;
  }
  if (embeddings.empty()) {
    throw Error(ErrorCode::kConfigError,
                "embeddings: required (or give sentence-vectors)");
  }
  RequireFile(embeddings, "embeddings");
}

SentenceVectorSource LoadVectorSource(const RunConfig& config) {
  config.RequireVectors();
  if (!config.sentence_vectors.empty()) {
    auto table = std::make_shared<const PrecomputedVectors>(
        PrecomputedVectors::LoadFile(config.sentence_vectors));
    return SentenceVectorSource::Precomputed(std::move(table));
  }
  auto store = std::make_shared<EmbeddingStore>(
      EmbeddingStore::LoadFile(config.embeddings));
  store->set_oov_policy(config.oov, config.seed);
  return SentenceVectorSource::AverageWords(
      std::move(store), AverageOptions{config.include_stopwords});
}

Corpus LoadScoringCorpus(const RunConfig& config) {
  config.ValidateParams();
  config.RequireCorpus();
  Corpus corpus = ReadCorpusFile(config.corpus);
  const SentenceVectorSource source = LoadVectorSource(config);
  AttachVectors(corpus, source);
  return corpus;
}

}  // namespace ssg::cli
