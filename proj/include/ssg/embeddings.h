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

#ifndef SSG_EMBEDDINGS_H_
#define SSG_EMBEDDINGS_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ssg/document.h"

namespace ssg {

enum class OovPolicy { kSkip, kRandom };

std::string_view OovPolicyName(OovPolicy policy);
std::optional<OovPolicy> ParseOovPolicy(std::string_view name);

// Word -> dense vector table. Immutable once loaded and safe to share
// between threads.
class EmbeddingStore {
 public:
  explicit EmbeddingStore(std::size_t dimension);

  // word2vec text format: "<vocab_count> <dimension>" header, then one
  // "<word> <c1> ... <cd>" line per word. Duplicate words keep the last
  // vector and are counted in duplicates(). Throws Error(kFormatError).
  static EmbeddingStore Load(std::istream& in);
  static EmbeddingStore LoadFile(const std::filesystem::path& path);

  // Throws Error(kDimensionMismatch) when values.size() != dimension().
  void Add(std::string_view word, std::span<const float> values);

  std::optional<std::span<const float>> Find(std::string_view word) const;

  // Vocabulary in lexicographic order.
  std::vector<std::string_view> SortedWords() const;

  // Inverse of Load(); words in lexicographic order.
  void Write(std::ostream& out) const;

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return index_.size(); }
  std::size_t duplicates() const { return duplicates_; }

  OovPolicy oov_policy() const { return oov_policy_; }
  std::uint64_t oov_seed() const { return oov_seed_; }
  void set_oov_policy(OovPolicy policy, std::uint64_t seed = 0) {
    oov_policy_ = policy;
    oov_seed_ = seed;
  }

 private:
  std::size_t dimension_;
  std::vector<float> values_;  // row-major, one row per word
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t duplicates_ = 0;
  OovPolicy oov_policy_ = OovPolicy::kSkip;
  std::uint64_t oov_seed_ = 0;
};

// Deterministic unit-norm stand-in vector for an out-of-vocabulary lemma.
Vector RandomUnitVector(std::uint64_t seed, std::string_view lemma,
                        std::size_t dimension);

// Externally computed sentence vectors keyed by (document id, sentence index).
class PrecomputedVectors {
 public:
  // Line-delimited JSON tuples: ["doc-1", 0, [0.12, -0.5, ...]].
  // Throws Error(kFormatError) or Error(kDimensionMismatch).
  static PrecomputedVectors Load(std::istream& in);
  static PrecomputedVectors LoadFile(const std::filesystem::path& path);

  // The first vector fixes the dimension; later ones must agree.
  void Add(std::string doc_id, std::size_t sentence_index, Vector vector);
  const Vector* Find(std::string_view doc_id,
                     std::size_t sentence_index) const;

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return table_.size(); }

 private:
  std::size_t dimension_ = 0;
  std::map<std::pair<std::string, std::size_t>, Vector, std::less<>> table_;
};

struct AverageOptions {
  bool include_stopwords = false;
};

// Where sentence vectors come from: averaged word vectors, or a table of
// precomputed sentence vectors (the Doc2Vec-style path).
class SentenceVectorSource {
 public:
  enum class Mode { kAverageWords, kPrecomputed };

  static SentenceVectorSource AverageWords(
      std::shared_ptr<const EmbeddingStore> store, AverageOptions options = {});
  // Throws Error(kDimensionMismatch) if expected_dimension is given and the
  // table disagrees with it.
  static SentenceVectorSource Precomputed(
      std::shared_ptr<const PrecomputedVectors> table,
      std::optional<std::size_t> expected_dimension = std::nullopt);

  Mode mode() const { return mode_; }
  std::size_t dimension() const { return dimension_; }

  // Mean of the contributing word vectors, or the table entry. ABSENT
  // (nullopt) when nothing contributes or the entry is missing.
  std::optional<Vector> SentenceVector(std::string_view doc_id,
                                       const Sentence& sentence) const;

 private:
  SentenceVectorSource() = default;

  Mode mode_ = Mode::kAverageWords;
  std::size_t dimension_ = 0;
  std::shared_ptr<const EmbeddingStore> store_;
  AverageOptions options_;
  std::shared_ptr<const PrecomputedVectors> table_;
};

// Resolves every sentence vector once; permutations then carry them along.
void AttachVectors(Document& doc, const SentenceVectorSource& source);
void AttachVectors(Corpus& corpus, const SentenceVectorSource& source);

double Dot(std::span<const double> u, std::span<const double> v);
double Norm(std::span<const double> u);

// u.v / (|u||v|) clamped to [-1, 1]. Throws Error(kZeroVector) when either
// norm is zero and Error(kDimensionMismatch) on differing sizes.
double Cosine(std::span<const double> u, std::span<const double> v);

// max(0, Cosine(u, v)).
double CosineClamped(std::span<const double> u, std::span<const double> v);

// Clamped cosine with precomputed norms; returns 0 if either norm is zero.
// Cosine() and CosineClamped() go through this same arithmetic.
double CosineClampedWithNorms(std::span<const double> u,
                              std::span<const double> v, double norm_u,
                              double norm_v);

}  // namespace ssg

#endif  // SSG_EMBEDDINGS_H_
