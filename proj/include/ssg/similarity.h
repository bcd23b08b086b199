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

#ifndef SSG_SIMILARITY_H_
#define SSG_SIMILARITY_H_

#include "ssg/document.h"

namespace ssg {

struct SimilarityParams {
  double alpha = 0.8;  // weight of entity overlap in SimMixed, in [0, 1]
  double theta = 0.0;  // MSV edge threshold, >= 0

  // Throws Error(kConfigError) naming the offending field.
  void Validate() const;

  friend bool operator==(const SimilarityParams&,
                         const SimilarityParams&) = default;
};

// |A ∩ B| / |A ∪ B| over sorted entity sets; 0 when both are empty.
double Uot(const EntitySet& a, const EntitySet& b);

// Clamped cosine of the attached sentence vectors; 0 when either vector is
// absent or zero.
double SentenceCosine(const Sentence& a, const Sentence& b);

// alpha * Uot + (1 - alpha) * SentenceCosine. Always in [0, 1].
double SimMixed(const Sentence& a, const Sentence& b, double alpha);

// SentenceCosine / |i - j| using the sentences' positions. Throws
// Error(kSameSentence) when both have the same index.
double SimDistanceWeighted(const Sentence& a, const Sentence& b);

}  // namespace ssg

#endif  // SSG_SIMILARITY_H_
