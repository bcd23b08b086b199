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

#ifndef SSG_DOCUMENT_H_
#define SSG_DOCUMENT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ssg {

using Vector = std::vector<double>;

// Sorted, duplicate-free set of lemmas.
using EntitySet = std::vector<std::string>;

struct Token {
  std::string surface;
  std::string lemma;  // lowercased, non-empty, no whitespace
  bool is_stopword = false;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::size_t index = 0;  // position in the owning document
  std::vector<Token> tokens;
  EntitySet entities;
  // Attached once per run by AttachVectors(); ABSENT when no word contributes.
  std::optional<Vector> vector;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;

  std::size_t size() const { return sentences.size(); }
};

using Corpus = std::vector<Document>;

// Rewrites sentence indices to 0..N-1 in current order.
void RepackIndices(Document& doc);

}  // namespace ssg

#endif  // SSG_DOCUMENT_H_
