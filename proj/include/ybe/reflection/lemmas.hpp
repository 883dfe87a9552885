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
 * @file lemmas.hpp
 *
 * Constructive gcd lemmas: shifting a pair by a common multiple to reach the
 * triple gcd, and lifting residues mod d to integers with the smallest
 * possible gcd. Both go through the Chinese remainder theorem and fall back to
 * a verified linear search when the modulus overflows.
 */

#pragma once

#include <ybe/number_theory.hpp>
#include <ybe/series/rational.hpp>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ybe {

namespace detail {

/// m >= 0 with p not dividing b + m * dd for every prime p of a, where
/// gcd(a, b, dd) = 1. Returns nullopt on overflow.
inline std::optional<std::int64_t> coprime_shift(std::int64_t a, std::int64_t b, std::int64_t dd) {
  std::vector<std::int64_t> residues, moduli;
  for (const auto p : nt::prime_divisors(a)) {
    moduli.push_back(p);
    residues.push_back(dd % p == 0 || b % p != 0 ? 0 : 1);
  }
  return nt::crt(residues, moduli);
}

inline std::int64_t search_limit(std::int64_t span) {
  const std::int64_t s = std::llabs(span);
  return s > (INT64_MAX / 8) ? INT64_MAX / 2 : 4 * s + 4;
}

}  // namespace detail

/// n >= 1 with gcd(a + n c, b + n c) = gcd(a, b, c). When parity is given, n
/// has that parity and a, b must have different parities.
inline std::int64_t triple_gcd_witness(std::int64_t a, std::int64_t b, std::int64_t c,
                                       std::optional<int> parity = std::nullopt) {
  if (a == b) throw std::invalid_argument("triple_gcd_witness needs a != b");
  if (parity && nt::mod(a - b, 2) == 0) throw std::invalid_argument("parity constraint needs a, b of different parity");
  const std::int64_t g = nt::gcd(nt::gcd(a, b), c);
  const auto ok = [&](std::int64_t n) {
    if (parity && nt::mod(n, 2) != *parity) return false;
    return nt::gcd(a + n * c, b + n * c) == g;
  };

  const std::int64_t a1 = a / g, b1 = b / g;
  std::vector<std::int64_t> residues, moduli;
  for (const auto p : nt::prime_divisors(b1 - a1)) {
    moduli.push_back(p);
    residues.push_back(a1 % p == 0 ? 1 : 0);
  }
  if (parity) {
    moduli.push_back(2);
    residues.push_back(*parity);
  }
  std::int64_t modulus = 1;
  bool fits = true;
  for (const auto p : moduli) {
    if (modulus > INT64_MAX / p) fits = false;
    else modulus *= p;
  }
  if (const auto n0 = fits ? nt::crt(residues, moduli) : std::nullopt) {
    const std::int64_t n = *n0 == 0 ? modulus : *n0;
    if (ok(n)) return n;
  }
  const std::int64_t limit = detail::search_limit(b - a);
  for (std::int64_t n = 1; n <= limit; ++n)
    if (ok(n)) return n;
  throw InternalError("no triple gcd witness found");
}

/// m with gcd_i(a_i + m_i d) = gcd(d, a_1, ..., a_k); with force_odd (d odd)
/// every a_i + m_i d is odd as well.
inline std::vector<std::int64_t> lift_to_coprime(const std::vector<std::int64_t>& a, std::int64_t d,
                                                 bool force_odd = false) {
  if (a.size() < 2) throw std::invalid_argument("lift_to_coprime needs at least two values");
  if (force_odd && nt::mod(d, 2) == 0) throw std::invalid_argument("force_odd needs odd d");

  std::vector<std::int64_t> m(a.size(), 0);
  std::int64_t target = d;
  for (const auto x : a) target = nt::gcd(target, x);

  if (force_odd) {
    std::vector<std::int64_t> odd(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      m[i] = nt::mod(a[i], 2) == 0 ? 1 : 0;
      odd[i] = a[i] + m[i] * d;
    }
    const auto inner = lift_to_coprime(odd, 2 * d, false);
    for (std::size_t i = 0; i < a.size(); ++i) m[i] += 2 * inner[i];
  } else {
    std::size_t pivot = a.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == a.size()) {
      m[0] = 1;
    } else {
      const std::int64_t p = a[pivot];
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (j == pivot) continue;
        const std::int64_t h = nt::gcd(nt::gcd(d, p), a[j]);
        if (h == 0) continue;
        std::optional<std::int64_t> s = detail::coprime_shift(p / h, a[j] / h, d / h);
        const auto good = [&](std::int64_t mj) { return nt::gcd(p, a[j] + mj * d) == h; };
        if (!s || !good(*s)) {
          s.reset();
          const std::int64_t limit = detail::search_limit(p);
          for (std::int64_t mj = 0; mj <= limit && !s; ++mj)
            if (good(mj)) s = mj;
          if (!s) throw InternalError("no coprime lift found");
        }
        m[j] = *s;
      }
    }
  }

  std::int64_t g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t v = a[i] + m[i] * d;
    g = nt::gcd(g, v);
    if (force_odd && nt::mod(v, 2) == 0) throw InternalError("lift is not odd");
  }
  if (g != target) throw InternalError("lift misses the target gcd");
  return m;
}

}  // namespace ybe
