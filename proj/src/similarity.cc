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

#include "ssg/similarity.h"

#include <cmath>

#include <fmt/format.h>

#include "ssg/embeddings.h"
#include "ssg/error.h"

namespace ssg {

void SimilarityParams::Validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kConfigError,
                fmt::format("alpha must be in [0, 1], got {}", alpha));
  }
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw Error(ErrorCode::kConfigError,
                fmt::format("theta must be >= 0, got {}", theta));
  }
}

double Uot(const EntitySet& a, const EntitySet& b) {
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  const std::size_t total = a.size() + b.size() - common;
  if (total == 0) return 0.0;
  return static_cast<double>(common) / static_cast<double>(total);
}

double SentenceCosine(const Sentence& a, const Sentence& b) {
  if (!a.vector || !b.vector) return 0.0;
  if (a.vector->size() != b.vector->size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("sentences {} and {} have vectors of size {} "
                            "and {}", a.index, b.index, a.vector->size(),
                            b.vector->size()));
  }
  return CosineClampedWithNorms(*a.vector, *b.vector, Norm(*a.vector),
                                Norm(*b.vector));
}

double SimMixed(const Sentence& a, const Sentence& b, double alpha) {
  return alpha * Uot(a.entities, b.entities) +
         (1.0 - alpha) * SentenceCosine(a, b);
}

double SimDistanceWeighted(const Sentence& a, const Sentence& b) {
  if (a.index == b.index) {
    throw Error(ErrorCode::kSameSentence,
                fmt::format("distance-weighted similarity of sentence {} "
                            "with itself", a.index));
  }
  const std::size_t distance =
      a.index > b.index ? a.index - b.index : b.index - a.index;
  return SentenceCosine(a, b) / static_cast<double>(distance);
}

}  // namespace ssg
