//  Copyright 2026 The Skula Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Seeded generators for random ordinals, shared by the self-test and the
// unit tests.

#ifndef SKULA_RANDOM_HPP_
#define SKULA_RANDOM_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "skula/ordinal.hpp"

namespace skula {

using Rng = std::mt19937_64;

struct OrdinalShape {
  int max_terms = 4;       // terms per CNF level
  int max_depth = 2;       // nesting depth of exponents; 0 means finite
  std::uint64_t max_coefficient = 5;
  bool allow_zero = true;
};

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline Ordinal random_ordinal(Rng& rng, const OrdinalShape& shape) {
  if (shape.allow_zero && uniform(rng, 0, 7) == 0) return Ordinal();
  if (shape.max_depth <= 0) return Ordinal(uniform(rng, 1, shape.max_coefficient));

  OrdinalShape inner = shape;
  inner.max_depth = shape.max_depth - 1;
  inner.allow_zero = true;
  const int count = static_cast<int>(uniform(rng, 1, static_cast<std::uint64_t>(shape.max_terms)));
  std::vector<Ordinal> exps;
  for (int i = 0; i < count; ++i) exps.push_back(random_ordinal(rng, inner));
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

  std::vector<Ordinal::Term> terms;
  for (auto& e : exps) {
    terms.push_back(Ordinal::Term{std::move(e), Natural(uniform(rng, 1, shape.max_coefficient))});
  }
  return Ordinal::from_terms(std::move(terms));
}

// Uniform-ish ordinal strictly below w^w * bound_coefficient with finite
// exponents up to max_exponent.
inline Ordinal random_ordinal_below_omega_omega(Rng& rng, std::uint64_t max_exponent,
                                                 std::uint64_t max_coefficient,
                                                 int max_terms = 4) {
  std::vector<std::uint64_t> exps;
  const int count = static_cast<int>(uniform(rng, 0, static_cast<std::uint64_t>(max_terms)));
  for (int i = 0; i < count; ++i) exps.push_back(uniform(rng, 0, max_exponent));
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Ordinal::Term> terms;
  for (auto e : exps) {
    terms.push_back(Ordinal::Term{Ordinal(e), Natural(uniform(rng, 1, max_coefficient))});
  }
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace skula

#endif  // SKULA_RANDOM_HPP_
