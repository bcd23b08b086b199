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

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <sstream>

#include "ssg/error.h"
#include "ssg/random.h"
#include "test_support.h"

namespace ssg {
namespace {

using testing::MakeSentence;

std::shared_ptr<EmbeddingStore> Store2D() {
  auto store = std::make_shared<EmbeddingStore>(2);
  store->Add("a", std::vector<float>{1, 2});
  store->Add("b", std::vector<float>{3, 4});
  store->Add("c", std::vector<float>{5, 0});
  store->Add("x", std::vector<float>{1, 0});
  store->Add("y", std::vector<float>{0, 1});
  return store;
}

ErrorCode LoadError(const std::string& text) {
  std::istringstream in(text);
  try {
    EmbeddingStore::Load(in);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::kIoError;
}

TEST(EmbeddingStoreTest, LoadsWord2VecText) {
  std::istringstream in("3 2\nкіт 0.5 -1\nпес 1e-1 2\nдім 3 4\n");
  const auto store = EmbeddingStore::Load(in);
  EXPECT_EQ(store.dimension(), 2u);
  EXPECT_EQ(store.size(), 3u);
  EXPECT_EQ(store.duplicates(), 0u);
  const auto row = store.Find("пес");
  ASSERT_TRUE(row.has_value());
  EXPECT_FLOAT_EQ((*row)[0], 0.1f);
  EXPECT_FLOAT_EQ((*row)[1], 2.0f);
  EXPECT_FALSE(store.Find("Пес").has_value());
}

TEST(EmbeddingStoreTest, DuplicateLastWinsAndIsCounted) {
  std::istringstream in("2 1\nкіт 1\nкіт 2\n");
  const auto store = EmbeddingStore::Load(in);
  EXPECT_EQ(store.size(), 1u);
  EXPECT_EQ(store.duplicates(), 1u);
  EXPECT_FLOAT_EQ((*store.Find("кіт"))[0], 2.0f);
}

TEST(EmbeddingStoreTest, FormatErrors) {
  EXPECT_EQ(LoadError(""), ErrorCode::kFormatError);
  EXPECT_EQ(LoadError("2\n"), ErrorCode::kFormatError);
  EXPECT_EQ(LoadError("1 0\n"), ErrorCode::kFormatError);
  EXPECT_EQ(LoadError("x 2\n"), ErrorCode::kFormatError);
  EXPECT_EQ(LoadError("1 2\nкіт 1\n"), ErrorCode::kFormatError);
  EXPECT_EQ(LoadError("1 2\nкіт 1 2 3\n"), ErrorCode::kFormatError);
  EXPECT_EQ(LoadError("1 2\nкіт 1 abc\n"), ErrorCode::kFormatError);
  EXPECT_EQ(LoadError("2 2\nкіт 1 2\n"), ErrorCode::kFormatError);
  EXPECT_EQ(LoadError("1 2\nкіт 1 2\nпес 3 4\n"), ErrorCode::kFormatError);
}

TEST(EmbeddingStoreTest, WriteThenLoadIsIdentity) {
  std::istringstream in("3 2\nb 0.25 -1\na 1.5 2\nc 3 4\n");
  const auto store = EmbeddingStore::Load(in);
  std::ostringstream out;
  store.Write(out);
  EXPECT_EQ(out.str(), "3 2\na 1.5 2\nb 0.25 -1\nc 3 4\n");
}

TEST(EmbeddingStoreTest, AddRejectsWrongDimension) {
  EmbeddingStore store(3);
  try {
    store.Add("a", std::vector<float>{1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(SentenceVectorTest, MeanOfTwoWords) {
  const auto source = SentenceVectorSource::AverageWords(Store2D());
  const auto v = source.SentenceVector("d", MakeSentence({"a", "b"}, {}));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, (Vector{2, 3}));
}

TEST(SentenceVectorTest, SingleWordIsIdentity) {
  const auto source = SentenceVectorSource::AverageWords(Store2D());
  EXPECT_EQ(*source.SentenceVector("d", MakeSentence({"c"}, {})),
            (Vector{5, 0}));
}

TEST(SentenceVectorTest, SkipDropsOutOfVocabulary) {
  const auto source = SentenceVectorSource::AverageWords(Store2D());
  EXPECT_EQ(*source.SentenceVector("d", MakeSentence({"x", "oov", "y"}, {})),
            (Vector{0.5, 0.5}));
  EXPECT_FALSE(
      source.SentenceVector("d", MakeSentence({"oov", "other"}, {})).has_value());
}

TEST(SentenceVectorTest, StopwordsExcludedUnlessRequested) {
  Sentence sentence = MakeSentence({"a", "b"}, {});
  sentence.tokens[1].is_stopword = true;
  const auto store = Store2D();
  EXPECT_EQ(*SentenceVectorSource::AverageWords(store).SentenceVector("d", sentence),
            (Vector{1, 2}));
  EXPECT_EQ(*SentenceVectorSource::AverageWords(store, {true})
                 .SentenceVector("d", sentence),
            (Vector{2, 3}));
}

TEST(SentenceVectorTest, RandomOovIsDeterministicUnitNorm) {
  auto store = Store2D();
  store->set_oov_policy(OovPolicy::kRandom, 99);
  const auto source = SentenceVectorSource::AverageWords(store);
  const auto v1 = source.SentenceVector("d", MakeSentence({"невідоме"}, {}));
  const auto v2 = source.SentenceVector("e", MakeSentence({"невідоме"}, {}));
  ASSERT_TRUE(v1.has_value());
  EXPECT_EQ(*v1, *v2);
  EXPECT_NEAR(Norm(*v1), 1.0, 1e-12);
  EXPECT_EQ(*v1, RandomUnitVector(99, "невідоме", 2));
  EXPECT_NE(RandomUnitVector(99, "інше", 16), RandomUnitVector(99, "невідоме", 16));
  EXPECT_NE(RandomUnitVector(98, "невідоме", 16), RandomUnitVector(99, "невідоме", 16));
  // In-vocabulary words are still looked up.
  const auto mixed = source.SentenceVector("d", MakeSentence({"c", "невідоме"}, {}));
  EXPECT_NEAR((*mixed)[0], (5.0 + (*v1)[0]) / 2, 1e-12);
}

TEST(SentenceVectorTest, AveragingIsPermutationInvariant) {
  auto store = std::make_shared<EmbeddingStore>(4);
  Rng rng(17);
  std::vector<std::string> vocab;
  for (int w = 0; w < 30; ++w) {
    vocab.push_back("w" + std::to_string(w));
    std::vector<float> row(4);
    // Dyadic values keep every partial sum exact, so order cannot matter.
    for (auto& x : row) x = static_cast<float>(rng.Below(64)) / 8.0f - 4.0f;
    store->Add(vocab.back(), row);
  }
  const auto source = SentenceVectorSource::AverageWords(store);
  for (int round = 0; round < 100; ++round) {
    std::vector<std::string> words;
    const auto len = 1 + rng.Below(10);
    for (std::uint64_t k = 0; k < len; ++k) {
      words.push_back(rng.Below(5) == 0 ? "oov" : vocab[rng.Below(vocab.size())]);
    }
    const Sentence original = MakeSentence(words, {});
    Sentence shuffled = original;
    rng.Shuffle(std::span(shuffled.tokens));
    EXPECT_EQ(source.SentenceVector("d", original),
              source.SentenceVector("d", shuffled));
  }
}

TEST(PrecomputedVectorsTest, LoadAndLookup) {
  std::istringstream in("[\"d1\", 0, [1, 0]]\n\n[\"d1\", 2, [0.5, 0.5]]\n");
  auto table = std::make_shared<PrecomputedVectors>(PrecomputedVectors::Load(in));
  EXPECT_EQ(table->dimension(), 2u);
  const auto source = SentenceVectorSource::Precomputed(table, 2);
  Sentence s0 = MakeSentence({"a"}, {});
  s0.index = 0;
  Sentence s1 = s0;
  s1.index = 1;
  EXPECT_EQ(*source.SentenceVector("d1", s0), (Vector{1, 0}));
  EXPECT_FALSE(source.SentenceVector("d1", s1).has_value());
  EXPECT_FALSE(source.SentenceVector("d2", s0).has_value());
}

TEST(PrecomputedVectorsTest, DimensionMismatch) {
  std::istringstream in("[\"d1\", 0, [1, 0]]\n[\"d1\", 1, [1, 0, 0]]\n");
  try {
    PrecomputedVectors::Load(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  auto table = std::make_shared<PrecomputedVectors>();
  table->Add("d", 0, {1, 2, 3});
  try {
    SentenceVectorSource::Precomputed(table, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(PrecomputedVectorsTest, MalformedRecords) {
  for (const std::string text :
       {"{\"d\":1}", "[\"d\", -1, [1]]", "[\"d\", 0, []]", "[\"d\", 0, [\"x\"]]",
        "[\"d\", 0]"}) {
    std::istringstream in(text);
    EXPECT_THROW(PrecomputedVectors::Load(in), Error) << text;
  }
}

TEST(AttachVectorsTest, UsesDocumentIdAndIndex) {
  auto table = std::make_shared<PrecomputedVectors>();
  table->Add("doc", 1, {0, 1});
  Document doc = testing::MakeDocument(
      "doc", {MakeSentence({"a"}, {}), MakeSentence({"b"}, {})});
  AttachVectors(doc, SentenceVectorSource::Precomputed(table));
  EXPECT_FALSE(doc.sentences[0].vector.has_value());
  EXPECT_EQ(*doc.sentences[1].vector, (Vector{0, 1}));
}

TEST(CosineTest, Examples) {
  EXPECT_DOUBLE_EQ(Cosine(Vector{3, 4}, Vector{3, 4}), 1.0);
  EXPECT_DOUBLE_EQ(Cosine(Vector{1, 0}, Vector{0, 1}), 0.0);
  EXPECT_NEAR(Cosine(Vector{1, 0}, Vector{1, 1}), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(Cosine(Vector{1, 0}, Vector{1, 1}), 0.70711, 5e-6);
}

TEST(CosineTest, ClampedExamples) {
  EXPECT_EQ(CosineClamped(Vector{1, 0}, Vector{-1, 0}), 0.0);
  EXPECT_DOUBLE_EQ(CosineClamped(Vector{2, 7}, Vector{2, 7}), 1.0);
  EXPECT_NEAR(CosineClamped(Vector{2, 1}, Vector{1, 2}), 0.8, 1e-15);
}

TEST(CosineTest, Errors) {
  try {
    Cosine(Vector{0, 0}, Vector{1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroVector);
  }
  EXPECT_THROW(CosineClamped(Vector{1, 0}, Vector{0, 0}), Error);
  try {
    Cosine(Vector{1, 0}, Vector{1, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  EXPECT_EQ(CosineClampedWithNorms(Vector{0, 0}, Vector{1, 0}, 0.0, 1.0), 0.0);
}

TEST(CosineTest, SymmetricScaleInvariantAndBounded) {
  Rng rng(23);
  for (int round = 0; round < 500; ++round) {
    Vector u(6);
    Vector v(6);
    for (auto& x : u) x = rng.Normal();
    for (auto& x : v) x = rng.Normal();
    const double c = Cosine(u, v);
    EXPECT_EQ(c, Cosine(v, u));
    EXPECT_GE(c, -1.0);
    EXPECT_LE(c, 1.0);
    const double a = 0.1 + 10 * rng.Uniform();
    const double b = 0.1 + 10 * rng.Uniform();
    Vector su = u;
    Vector sv = v;
    for (auto& x : su) x *= a;
    for (auto& x : sv) x *= b;
    EXPECT_NEAR(Cosine(su, sv), c, 1e-12);
    const double clamped = CosineClamped(u, v);
    EXPECT_GE(clamped, 0.0);
    EXPECT_LE(clamped, 1.0);
  }
}

}  // namespace
}  // namespace ssg
