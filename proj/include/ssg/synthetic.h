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

#ifndef SSG_SYNTHETIC_H_
#define SSG_SYNTHETIC_H_

// Planted-coherence corpus: documents whose adjacent sentences share an
// entity lemma and whose word vectors drift slowly along the document, so
// the original sentence order is the most coherent one by construction.
//
// Sentence i of a document holds the chain words c_i and c_{i+1}, some
// filler words drawn from a shared pool, and one stopword. Chain vectors
// follow c_k = drift * c_{k-1} + sqrt(1 - drift^2) * g_k (renormalized).

#include <cstdint>

#include "ssg/document.h"
#include "ssg/embeddings.h"

namespace ssg {

struct SyntheticOptions {
  std::size_t n_docs = 100;
  std::size_t min_sentences = 6;
  std::size_t max_sentences = 14;
  std::size_t dimension = 32;
  std::size_t filler_vocab = 200;
  std::size_t fillers_per_sentence = 1;
  double drift = 0.6;
  std::uint64_t seed = 20200101;
};

struct SyntheticCorpus {
  Corpus corpus;
  EmbeddingStore store;
};

SyntheticCorpus GenerateSyntheticCorpus(const SyntheticOptions& options);

}  // namespace ssg

#endif  // SSG_SYNTHETIC_H_
