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

#ifndef SSG_RANDOM_H_
#define SSG_RANDOM_H_

// Seeded randomness with results that are identical across standard
// libraries. std::mt19937_64 is bit-specified by the standard; the
// distributions on top of it are not, so the few we need live here.

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace ssg {

// SplitMix64 finalizer. Used to derive independent stream seeds.
std::uint64_t MixSeed(std::uint64_t value);

// FNV-1a over bytes; stable key for strings such as document ids.
std::uint64_t HashString(std::string_view text);

// Seed for a named sub-stream, e.g. DeriveSeed(seed, HashString(doc), trial).
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t a,
                         std::uint64_t b = 0);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform();

  // Standard normal via Box-Muller (no cached second value).
  double Normal();

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(Below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ssg

#endif  // SSG_RANDOM_H_
