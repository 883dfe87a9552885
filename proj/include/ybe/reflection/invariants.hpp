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
 * @file invariants.hpp
 *
 * Words over the reflection solutions x > y = 2x - y, on Z (modulus 0) or on
 * Z_d, and the numerical invariants that classify their braiding orbits:
 * weight, density, anchor and the essential even/odd lengths.
 */

#pragma once

#include <ybe/number_theory.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybe {

struct ReflectionWord {
  std::vector<std::int64_t> letters;
  /// 0 for the infinite solution on Z, otherwise d >= 1.
  std::int64_t modulus = 0;

  static ReflectionWord infinite(std::vector<std::int64_t> letters) { return {std::move(letters), 0}; }

  static ReflectionWord finite(std::vector<std::int64_t> letters, std::int64_t d) {
    if (d < 1) throw std::invalid_argument("modulus must be positive");
    for (const auto x : letters)
      if (x < 0 || x >= d) throw std::invalid_argument("letter out of range for the modulus");
    return {std::move(letters), d};
  }

  [[nodiscard]] bool is_infinite() const { return modulus == 0; }
  [[nodiscard]] std::size_t length() const { return letters.size(); }

  /// Reduces mod d when finite.
  [[nodiscard]] std::int64_t normalize(std::int64_t x) const { return is_infinite() ? x : nt::mod(x, modulus); }

  friend bool operator==(const ReflectionWord&, const ReflectionWord&) = default;
};

/// "e_5^2 e_3"; "1" for the empty word.
inline std::string to_string(const ReflectionWord& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.letters.size();) {
    std::size_t run = 1;
    while (k + run < w.letters.size() && w.letters[k + run] == w.letters[k]) ++run;
    if (!s.empty()) s += " ";
    s += "e_" + std::to_string(w.letters[k]);
    if (run > 1) s += "^" + std::to_string(run);
    k += run;
  }
  return s;
}

struct InvariantTuple {
  std::int64_t weight = 0;     // signed for the infinite solution, least residue mod d otherwise
  std::int64_t density = 0;
  std::int64_t anchor = 0;
  std::int64_t ess_even = 0;
  std::int64_t ess_odd = 0;
  std::int64_t length = 0;
  std::int64_t modulus = 0;

  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
  friend auto operator<=>(const InvariantTuple&, const InvariantTuple&) = default;
};

/// a_1 - a_2 + ... + (-1)^{n+1} a_n, reduced when finite.
inline std::int64_t weight(const ReflectionWord& w) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.letters.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * w.letters[i];
  return w.normalize(s);
}

/// gcd of consecutive differences (with d prepended when finite). A single
/// letter has density 0 over Z and d over Z_d; the empty word has density 0.
inline std::int64_t density(const ReflectionWord& w) {
  if (w.letters.empty()) return 0;
  std::int64_t g = w.modulus;
  for (std::size_t i = 1; i < w.letters.size(); ++i) g = nt::gcd(g, w.letters[i - 1] - w.letters[i]);
  return g;
}

/// Least residue of any letter modulo the density; the letter itself for
/// frozen words over Z.
inline std::int64_t anchor(const ReflectionWord& w) {
  if (w.letters.empty()) return 0;
  const std::int64_t g = density(w);
  return g == 0 ? w.letters.front() : nt::mod(w.letters.front(), g);
}

/// Letters mapped by x -> (x - anchor) / density; the result has density 1
/// and lives on Z or on Z_{d / density}.
inline ReflectionWord essentialise(const ReflectionWord& w) {
  if (w.letters.empty()) return w;
  const std::int64_t g = density(w);
  if (g == 0) throw std::domain_error("frozen word over Z has no essentialisation");
  const std::int64_t a = anchor(w);
  ReflectionWord out{{}, w.is_infinite() ? 0 : w.modulus / g};
  for (const auto x : w.letters) out.letters.push_back((x - a) / g);
  return out;
}

inline InvariantTuple invariants(const ReflectionWord& w) {
  InvariantTuple t;
  t.modulus = w.modulus;
  t.length = static_cast<std::int64_t>(w.letters.size());
  if (w.letters.empty()) return t;
  t.weight = weight(w);
  t.density = density(w);
  t.anchor = anchor(w);
  // frozen words over Z keep their own parities; odd levels carry no parity
  // split, so the whole length is booked as even
  const ReflectionWord base = t.density == 0 ? w : essentialise(w);
  if (!base.is_infinite() && base.modulus % 2 == 1) {
    t.ess_even = t.length;
    return t;
  }
  for (const auto x : base.letters) (nt::mod(x, 2) == 0 ? t.ess_even : t.ess_odd) += 1;
  return t;
}

/// The letter b with w e_a = e_b w.
inline std::int64_t push_through(const ReflectionWord& w, std::int64_t a) {
  const std::int64_t sign = w.letters.size() % 2 == 0 ? 1 : -1;
  return w.normalize(sign * a + 2 * weight(w));
}

/// Density of a product vw from the invariants of v and w.
inline std::int64_t density_of_product(const InvariantTuple& v, const InvariantTuple& w) {
  if (v.modulus != w.modulus) throw std::invalid_argument("modulus mismatch");
  if (v.length == 0) return w.density;
  if (w.length == 0) return v.density;
  return nt::gcd(nt::gcd(v.density, w.density), nt::gcd(v.anchor - w.anchor, v.modulus));
}

/// Equality in the structure monoid, decided by the complete invariants.
inline bool elements_equal(const ReflectionWord& a, const ReflectionWord& b) {
  if (a.modulus != b.modulus) throw std::invalid_argument("modulus mismatch");
  return invariants(a) == invariants(b);
}

}  // namespace ybe
