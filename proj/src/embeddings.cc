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

#include "ssg/embeddings.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "ssg/error.h"
#include "ssg/random.h"
#include "ssg/unicode.h"

namespace ssg {

namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t begin = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > begin) fields.push_back(line.substr(begin, pos - begin));
  }
  return fields;
}

template <typename T>
bool ParseNumber(std::string_view text, T& value) {
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

[[noreturn]] void FormatFail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kFormatError,
              fmt::format("vectors line {}: {}", line_no, what));
}

double RawCosine(std::span<const double> u, std::span<const double> v,
                 double norm_u, double norm_v) {
  return std::clamp(Dot(u, v) / (norm_u * norm_v), -1.0, 1.0);
}

}  // namespace

std::string_view OovPolicyName(OovPolicy policy) {
  return policy == OovPolicy::kSkip ? "skip" : "random";
}

std::optional<OovPolicy> ParseOovPolicy(std::string_view name) {
  const std::string lowered = unicode::ToLower(name);
  if (lowered == "skip") return OovPolicy::kSkip;
  if (lowered == "random") return OovPolicy::kRandom;
  return std::nullopt;
}

EmbeddingStore::EmbeddingStore(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) {
    throw Error(ErrorCode::kFormatError, "embedding dimension must be > 0");
  }
}

EmbeddingStore EmbeddingStore::Load(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t vocab = 0;
  std::size_t dimension = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!unicode::Trim(line).empty()) break;
  }
  {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = SplitFields(line);
    if (header.size() != 2 || !ParseNumber(header[0], vocab) ||
        !ParseNumber(header[1], dimension) || dimension == 0) {
      FormatFail(line_no, "header must be '<vocab_count> <dimension>'");
    }
  }

  EmbeddingStore store(dimension);
  store.values_.reserve(vocab * dimension);
  std::vector<float> row(dimension);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = SplitFields(line);
    if (fields.empty()) continue;
    if (rows == vocab) FormatFail(line_no, "more entries than declared");
    if (fields.size() != dimension + 1) {
      FormatFail(line_no, fmt::format("expected {} components, got {}",
                                      dimension, fields.size() - 1));
    }
    for (std::size_t k = 0; k < dimension; ++k) {
      if (!ParseNumber(fields[k + 1], row[k]) || !std::isfinite(row[k])) {
        FormatFail(line_no, fmt::format("non-numeric component '{}'",
                                        fields[k + 1]));
      }
    }
    store.Add(fields[0], row);
    ++rows;
  }
  if (rows != vocab) {
    FormatFail(line_no, fmt::format("declared {} entries, found {}", vocab,
                                    rows));
  }
  return store;
}

EmbeddingStore EmbeddingStore::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError,
                fmt::format("cannot open vectors '{}'", path.string()));
  }
  return Load(in);
}

void EmbeddingStore::Add(std::string_view word, std::span<const float> values) {
  if (values.size() != dimension_) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("vector for '{}' has {} components, expected {}",
                            word, values.size(), dimension_));
  }
  const auto [it, inserted] = index_.try_emplace(std::string(word),
                                                 values_.size() / dimension_);
  if (inserted) {
    values_.insert(values_.end(), values.begin(), values.end());
  } else {
    ++duplicates_;
    std::copy(values.begin(), values.end(),
              values_.begin() +
                  static_cast<std::ptrdiff_t>(it->second * dimension_));
  }
}

std::optional<std::span<const float>> EmbeddingStore::Find(
    std::string_view word) const {
  const auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return std::span<const float>(values_.data() + it->second * dimension_,
                                dimension_);
}

std::vector<std::string_view> EmbeddingStore::SortedWords() const {
  std::vector<std::string_view> words;
  words.reserve(index_.size());
  for (const auto& [word, row] : index_) words.push_back(word);
  std::sort(words.begin(), words.end());
  return words;
}

void EmbeddingStore::Write(std::ostream& out) const {
  out << index_.size() << ' ' << dimension_ << '\n';
  std::string line;
  for (const auto word : SortedWords()) {
    line.assign(word);
    const std::span<const float> row = *Find(word);
    for (const float x : row) line += fmt::format(" {}", x);
    line += '\n';
    out << line;
  }
}

Vector RandomUnitVector(std::uint64_t seed, std::string_view lemma,
                        std::size_t dimension) {
  Rng rng(DeriveSeed(seed, HashString(lemma)));
  Vector out(dimension);
  double norm = 0.0;
  while (norm == 0.0) {
    for (auto& x : out) x = rng.Normal();
    norm = Norm(out);
  }
  for (auto& x : out) x /= norm;
  return out;
}

PrecomputedVectors PrecomputedVectors::Load(std::istream& in) {
  PrecomputedVectors table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (unicode::Trim(line).empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      FormatFail(line_no, e.what());
    }
    if (!record.is_array() || record.size() != 3 || !record[0].is_string() ||
        !record[1].is_number_unsigned() || !record[2].is_array() ||
        record[2].empty()) {
      FormatFail(line_no, "expected [doc_id, sentence_index, [c1..cd]]");
    }
    Vector vector;
    vector.reserve(record[2].size());
    for (const auto& c : record[2]) {
      if (!c.is_number()) FormatFail(line_no, "non-numeric component");
      vector.push_back(c.get<double>());
    }
    table.Add(record[0].get<std::string>(), record[1].get<std::size_t>(),
              std::move(vector));
  }
  return table;
}

PrecomputedVectors PrecomputedVectors::LoadFile(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError,
                fmt::format("cannot open sentence vectors '{}'",
                            path.string()));
  }
  return Load(in);
}

void PrecomputedVectors::Add(std::string doc_id, std::size_t sentence_index,
                             Vector vector) {
  if (table_.empty()) {
    dimension_ = vector.size();
  } else if (vector.size() != dimension_) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("sentence vector ({}, {}) has {} components, "
                            "expected {}", doc_id, sentence_index,
                            vector.size(), dimension_));
  }
  table_.insert_or_assign({std::move(doc_id), sentence_index},
                          std::move(vector));
}

const Vector* PrecomputedVectors::Find(std::string_view doc_id,
                                       std::size_t sentence_index) const {
  const auto it = table_.find(std::pair(std::string(doc_id), sentence_index));
  return it == table_.end() ? nullptr : &it->second;
}

SentenceVectorSource SentenceVectorSource::AverageWords(
    std::shared_ptr<const EmbeddingStore> store, AverageOptions options) {
  SentenceVectorSource source;
  source.mode_ = Mode::kAverageWords;
  source.dimension_ = store->dimension();
  source.store_ = std::move(store);
  source.options_ = options;
  return source;
}

SentenceVectorSource SentenceVectorSource::Precomputed(
    std::shared_ptr<const PrecomputedVectors> table,
    std::optional<std::size_t> expected_dimension) {
  if (expected_dimension && table->size() > 0 &&
      table->dimension() != *expected_dimension) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("precomputed vectors have dimension {}, "
                            "configured {}", table->dimension(),
                            *expected_dimension));
  }
  SentenceVectorSource source;
  source.mode_ = Mode::kPrecomputed;
  source.dimension_ =
      expected_dimension ? *expected_dimension : table->dimension();
  source.table_ = std::move(table);
  return source;
}

std::optional<Vector> SentenceVectorSource::SentenceVector(
    std::string_view doc_id, const Sentence& sentence) const {
  if (mode_ == Mode::kPrecomputed) {
    const Vector* found = table_->Find(doc_id, sentence.index);
    if (found == nullptr) return std::nullopt;
    if (found->size() != dimension_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  fmt::format("sentence vector ({}, {}) has {} components, "
                              "expected {}", doc_id, sentence.index,
                              found->size(), dimension_));
    }
    return *found;
  }

  Vector sum(dimension_, 0.0);
  std::size_t contributing = 0;
  for (const auto& token : sentence.tokens) {
    if (token.is_stopword && !options_.include_stopwords) continue;
    if (const auto row = store_->Find(token.lemma)) {
      for (std::size_t k = 0; k < dimension_; ++k) sum[k] += (*row)[k];
    } else if (store_->oov_policy() == OovPolicy::kRandom) {
      const Vector stand_in =
          RandomUnitVector(store_->oov_seed(), token.lemma, dimension_);
      for (std::size_t k = 0; k < dimension_; ++k) sum[k] += stand_in[k];
    } else {
      continue;
    }
    ++contributing;
  }
  if (contributing == 0) return std::nullopt;
  const auto m = static_cast<double>(contributing);
  for (auto& x : sum) x /= m;
  return sum;
}

void AttachVectors(Document& doc, const SentenceVectorSource& source) {
  for (auto& sentence : doc.sentences) {
    sentence.vector = source.SentenceVector(doc.id, sentence);
  }
}

void AttachVectors(Corpus& corpus, const SentenceVectorSource& source) {
  for (auto& doc : corpus) AttachVectors(doc, source);
}

double Dot(std::span<const double> u, std::span<const double> v) {
  double sum = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) sum += u[k] * v[k];
  return sum;
}

double Norm(std::span<const double> u) { return std::sqrt(Dot(u, u)); }

double Cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("cosine of vectors with {} and {} components",
                            u.size(), v.size()));
  }
  const double norm_u = Norm(u);
  const double norm_v = Norm(v);
  if (norm_u == 0.0 || norm_v == 0.0) {
    throw Error(ErrorCode::kZeroVector, "cosine of a zero vector");
  }
  return RawCosine(u, v, norm_u, norm_v);
}

double CosineClamped(std::span<const double> u, std::span<const double> v) {
  return std::max(0.0, Cosine(u, v));
}

double CosineClampedWithNorms(std::span<const double> u,
                              std::span<const double> v, double norm_u,
                              double norm_v) {
  if (norm_u == 0.0 || norm_v == 0.0) return 0.0;
  return std::max(0.0, RawCosine(u, v, norm_u, norm_v));
}

}  // namespace ssg
