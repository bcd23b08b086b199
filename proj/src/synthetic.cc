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

#include "ssg/synthetic.h"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "ssg/error.h"
#include "ssg/preprocess.h"
#include "ssg/random.h"

namespace ssg {

namespace {

constexpr std::string_view kStopword = "і";

std::vector<float> RandomUnit(Rng& rng, std::size_t dimension) {
  std::vector<double> v(dimension);
  double norm = 0.0;
  while (norm == 0.0) {
    for (auto& x : v) x = rng.Normal();
    norm = Norm(v);
  }
  std::vector<float> out(dimension);
  for (std::size_t k = 0; k < dimension; ++k) {
    out[k] = static_cast<float>(v[k] / norm);
  }
  return out;
}

Token MakeToken(std::string lemma, bool stop = false) {
  return Token{lemma, lemma, stop};
}

}  // namespace

SyntheticCorpus GenerateSyntheticCorpus(const SyntheticOptions& options) {
  if (options.min_sentences == 0 ||
      options.max_sentences < options.min_sentences ||
      options.dimension == 0 || !(options.drift >= 0.0 && options.drift < 1.0)) {
    throw Error(ErrorCode::kConfigError, "invalid synthetic corpus options");
  }
  SyntheticCorpus out{{}, EmbeddingStore(options.dimension)};
  Rng rng(options.seed);
  const std::size_t d = options.dimension;

  std::vector<std::string> fillers;
  for (std::size_t f = 0; f < options.filler_vocab; ++f) {
    fillers.push_back(fmt::format("f{:03}", f));
    out.store.Add(fillers.back(), RandomUnit(rng, d));
  }

  const double fresh = std::sqrt(1.0 - options.drift * options.drift);
  const std::size_t width = fmt::format("{}", options.n_docs).size();
  for (std::size_t doc_no = 0; doc_no < options.n_docs; ++doc_no) {
    const std::size_t n =
        options.min_sentences +
        static_cast<std::size_t>(
            rng.Below(options.max_sentences - options.min_sentences + 1));

    std::vector<std::string> chain;
    std::vector<float> previous;
    for (std::size_t k = 0; k <= n; ++k) {
      chain.push_back(fmt::format("d{:0{}}c{:02}", doc_no, width, k));
      std::vector<float> v = RandomUnit(rng, d);
      if (!previous.empty()) {
        std::vector<double> mixed(d);
        for (std::size_t c = 0; c < d; ++c) {
          mixed[c] = options.drift * previous[c] + fresh * v[c];
        }
        const double norm = Norm(mixed);
        for (std::size_t c = 0; c < d; ++c) {
          v[c] = static_cast<float>(mixed[c] / norm);
        }
      }
      out.store.Add(chain.back(), v);
      previous = std::move(v);
    }

    Document doc;
    doc.id = fmt::format("synth-{:0{}}", doc_no, width);
    for (std::size_t i = 0; i < n; ++i) {
      Sentence sentence;
      sentence.tokens.push_back(MakeToken(chain[i]));
      sentence.tokens.push_back(MakeToken(std::string(kStopword), true));
      for (std::size_t f = 0; f < options.fillers_per_sentence && !fillers.empty();
           ++f) {
        sentence.tokens.push_back(
            MakeToken(fillers[static_cast<std::size_t>(rng.Below(fillers.size()))]));
      }
      sentence.tokens.push_back(MakeToken(chain[i + 1]));
      sentence.entities = ExtractEntities(sentence.tokens);
      doc.sentences.push_back(std::move(sentence));
    }
    RepackIndices(doc);
    out.corpus.push_back(std::move(doc));
  }
  return out;
}

}  // namespace ssg
