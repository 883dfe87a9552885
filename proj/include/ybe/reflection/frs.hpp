/*
 *   Copyright 2026 The ybe-growth Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file frs.hpp
 *
 * Full reflection semigroups of level d and the growth of the reflection
 * structure monoids. A full element of level d is determined by its weight
 * and its length, split into even and odd letters when d is even.
 */

#pragma once

#include <ybe/number_theory.hpp>
#include <ybe/reflection/invariants.hpp>
#include <ybe/series/polynomial.hpp>
#include <ybe/series/rational_gf.hpp>

#include <cstdint>
#include <stdexcept>

namespace ybe {

/// (weight, even count, odd count) for even d, (weight, length, 0) for odd
/// d > 1 and (0, length, 0) for d = 1.
struct FRSImage {
  std::int64_t weight = 0;
  std::int64_t first = 0;
  std::int64_t second = 0;
  friend bool operator==(const FRSImage&, const FRSImage&) = default;
  friend auto operator<=>(const FRSImage&, const FRSImage&) = default;
};

inline FRSImage frs_embed(const ReflectionWord& w) {
  if (w.is_infinite()) throw std::invalid_argument("frs_embed needs a finite modulus");
  if (w.letters.empty() || density(w) != 1) throw std::invalid_argument("word is not full");
  const std::int64_t d = w.modulus;
  const auto n = static_cast<std::int64_t>(w.letters.size());
  if (d == 1) return {0, n, 0};
  if (d % 2 == 1) return {weight(w), n, 0};
  FRSImage img{weight(w), 0, 0};
  for (const auto x : w.letters) (x % 2 == 0 ? img.first : img.second) += 1;
  return img;
}

/// Whether img is the image of some full word of level d.
inline bool frs_image_contains(std::int64_t d, const FRSImage& img) {
  if (d < 1) throw std::invalid_argument("level must be positive");
  if (d == 1) return img.weight == 0 && img.first >= 1 && img.second == 0;
  if (img.weight < 0 || img.weight >= d) return false;
  const bool unit = nt::gcd(img.weight, d) == 1;
  if (d % 2 == 1) return img.second == 0 && (img.first >= 3 || (img.first == 2 && unit));
  const std::int64_t k = img.first, l = img.second;
  if (k < 1 || l < 1) return false;
  if (k == 1 && l == 1) return unit;
  return nt::mod(l - img.weight, 2) == 0;
}

/// Restricted growth series of FRS_d.
inline RationalGF frs_growth_gf(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("level must be positive");
  const Polynomial one_minus_t{1, -1};
  if (d == 1) return {Polynomial{0, 1}, one_minus_t};
  const Polynomial squares = Polynomial::monomial(Rational(nt::euler_phi(d)), 2);
  if (d % 2 == 1) return RationalGF(squares) + RationalGF(Polynomial::monomial(Rational(d), 3), one_minus_t);
  const Polynomial tail = Polynomial::monomial(Rational(d, 2), 3) * Polynomial{2, -1};
  return RationalGF(squares) + RationalGF(tail, one_minus_t * one_minus_t);
}

/// 1 + d (t + (sum_{c|d} phi(c)/c) t^2 + tau(d) t^3/(1-t) + tau(d/2) t^4/(2(1-t)^2)).
inline RationalGF monoid_growth_reflections(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("reflection monoid needs d >= 1");
  const Polynomial one_minus_t{1, -1};
  Rational phi_sum = 0;
  for (const auto c : nt::divisors(d)) phi_sum += Rational(nt::euler_phi(c), c);
  RationalGF inner(Polynomial{0, 1, phi_sum});
  inner += RationalGF(Polynomial::monomial(Rational(nt::tau(d)), 3), one_minus_t);
  inner += RationalGF(Polynomial::monomial(Rational(nt::tau(d, 2), 2), 4), one_minus_t * one_minus_t);
  return RationalGF(Polynomial::constant(1)) + inner * Rational(d);
}

/// 1 + sum_{c|d} (d/c) G_{FRS_c}, summing the full components of all levels.
inline RationalGF monoid_growth_reflections_by_levels(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("reflection monoid needs d >= 1");
  RationalGF total(Polynomial::constant(1));
  for (const auto c : nt::divisors(d)) total += frs_growth_gf(c) * Rational(d / c);
  return total;
}

}  // namespace ybe
