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

#pragma once

#include <ybe/series/polynomial.hpp>
#include <ybe/series/rational_gf.hpp>
#include <ybe/series/truncated_series.hpp>

#include <cstddef>
#include <stdexcept>

namespace ybe {

/// Growth series of the structure group from the growth series G of the
/// underlying finite group: (1+t^2)/(1-t^2) G + t G'.
inline RationalGF class2_lift(const RationalGF& small) {
  const RationalGF factor(Polynomial{1, 0, 1}, Polynomial{1, 0, -1});
  return factor * small + RationalGF(Polynomial{0, 1}) * small.derivative();
}

/// Truncated version; the result has order one less than the input.
inline TruncatedSeries class2_lift(const TruncatedSeries& small) {
  if (small.order() < 1) throw std::domain_error("class-2 lift needs a series of order >= 1");
  const std::size_t n = small.order() - 1;
  const TruncatedSeries factor = RationalGF(Polynomial{1, 0, 1}, Polynomial{1, 0, -1}).expand(n);
  return factor * small.truncated(n) + small.derivative().shifted(1);
}

/// prod_{k=1}^{d-1} (1 + k t): length distribution of S_d over transpositions.
inline Polynomial solomon_series(int d) {
  if (d < 1) throw std::invalid_argument("solomon series needs d >= 1");
  Polynomial p = Polynomial::constant(1);
  for (int k = 1; k < d; ++k) p *= one_plus(k);
  return p;
}

/// Growth series of As(T_d), assembled over the common denominator 1 - t.
inline RationalGF as_transpositions_group_gf(int d) {
  if (d < 2) throw std::invalid_argument("transposition group series needs d >= 2");
  Polynomial head = Polynomial{1, 0, 1};
  for (int k = 2; k < d; ++k) head *= one_plus(k);
  // t * prod_k (1 + kt) * sum_k k / (1 + kt) = t * sum_k k prod_{j != k} (1 + jt)
  Polynomial tail;
  for (int k = 1; k < d; ++k) {
    Polynomial term = Polynomial::constant(k);
    for (int j = 1; j < d; ++j)
      if (j != k) term *= one_plus(j);
    tail += term;
  }
  const Polynomial one_minus_t{1, -1};
  return {head + tail.shifted(1) * one_minus_t, one_minus_t};
}

/// Growth series of As(R_d).
inline RationalGF as_reflections_group_gf(int d) {
  if (d < 2) throw std::invalid_argument("reflection group series needs d >= 2");
  const Polynomial one_minus_t{1, -1};
  if (d % 2 == 1) {
    // 2dt/(1-t) + 1 + (d-1)t^2
    const Polynomial rest{1, 0, d - 1};
    return {Polynomial::monomial(2 * d, 1) + rest * one_minus_t, one_minus_t};
  }
  // (d/2) ((1+t)/(1-t))^2 + (d/2 - 1)(t^2 - 1)
  const Polynomial den = pow(one_minus_t, 2);
  const Polynomial num = pow(Polynomial{1, 1}, 2) * Rational(d / 2) + Polynomial{-1, 0, 1} * Rational(d / 2 - 1) * den;
  return {num, den};
}

}  // namespace ybe
