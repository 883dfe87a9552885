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
 * @file normal_form.hpp
 *
 * Canonical words for elements of the reflection structure monoids.
 *
 * Lengths 2 and 3 have their own shapes. From length 4 on, a word is
 * essentialised and written as e_0^k e_1^l e_c with k, l > 0, then mapped back
 * by x -> deg * x + anchor. Over Z and at even levels two such presentations
 * usually exist, one for each parity of c; the even one is kept. At odd levels
 * the presentation with l = 1 is unique.
 */

#pragma once

#include <ybe/reflection/invariants.hpp>
#include <ybe/series/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ybe {

enum class NormalShape { Empty, FrozenPower, Length2, Length3, Standard };

inline std::string to_string(NormalShape s) {
  switch (s) {
    case NormalShape::Empty: return "empty";
    case NormalShape::FrozenPower: return "frozen-power";
    case NormalShape::Length2: return "length2";
    case NormalShape::Length3: return "length3";
    case NormalShape::Standard: return "standard";
  }
  return "unknown";
}

struct NormalForm {
  NormalShape shape = NormalShape::Empty;
  /// Standard shape: e_0^k e_1^l e_c before scaling.
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t c = 0;
  /// Letter map x -> scale * x + shift applied to the essential shape.
  std::int64_t scale = 1;
  std::int64_t shift = 0;
  ReflectionWord word;
};

namespace detail {

/// e_0^k e_1^l e_c for a density-1 word with the given invariants.
inline NormalForm standard_form(std::int64_t omega, std::int64_t even, std::int64_t odd, std::int64_t n,
                                std::int64_t level) {
  NormalForm nf;
  nf.shape = NormalShape::Standard;
  const bool odd_level = level % 2 == 1;
  if (odd_level) {
    nf.k = n - 2;
    nf.l = 1;
  } else if (even >= 2 && odd >= 1) {
    nf.k = even - 1;
    nf.l = odd;
  } else {
    nf.k = even;
    nf.l = odd - 1;
  }
  if (nf.k <= 0 || nf.l <= 0) throw InternalError("no standard presentation for a full word");
  // weight of e_0^k e_1^l e_c is [l odd](-1)^k + (-1)^{n+1} c
  const std::int64_t ones = nf.l % 2 == 1 ? (nf.k % 2 == 0 ? 1 : -1) : 0;
  const std::int64_t sign = n % 2 == 1 ? 1 : -1;
  nf.c = sign * (omega - ones);
  if (level > 0) nf.c = nt::mod(nf.c, level);
  return nf;
}

/// Normal form of a density-1 word over Z (level 0) or Z_level.
inline NormalForm essential_form(const ReflectionWord& w) {
  const InvariantTuple t = invariants(w);
  const std::int64_t n = t.length;
  const std::int64_t level = w.modulus;
  const std::int64_t omega = t.weight;
  NormalForm nf;
  if (level == 1) {
    nf.shape = NormalShape::FrozenPower;
    nf.word = {std::vector<std::int64_t>(static_cast<std::size_t>(n), 0), 1};
    return nf;
  }
  auto norm = [&](std::int64_t x) { return level > 0 ? nt::mod(x, level) : x; };
  if (n == 2) {
    nf.shape = NormalShape::Length2;
    nf.word = {{0, norm(-omega)}, level};
  } else if (n == 3) {
    nf.shape = NormalShape::Length3;
    nf.word = {{norm(omega + 1), norm(omega + 1), norm(omega)}, level};
  } else {
    nf = standard_form(omega, t.ess_even, t.ess_odd, n, level);
    nf.word.modulus = level;
    nf.word.letters.assign(static_cast<std::size_t>(nf.k), 0);
    nf.word.letters.insert(nf.word.letters.end(), static_cast<std::size_t>(nf.l), 1);
    nf.word.letters.push_back(nf.c);
  }
  return nf;
}

}  // namespace detail

inline NormalForm normal_form(const ReflectionWord& w) {
  if (w.letters.empty()) return {.word = w};
  const std::int64_t g = density(w);
  const std::int64_t a = anchor(w);
  if (g == 0) {
    NormalForm nf{.shape = NormalShape::FrozenPower, .scale = 0, .shift = a, .word = w};
    return nf;
  }
  if (w.letters.size() == 1) {
    return {.shape = NormalShape::FrozenPower, .scale = g, .shift = a, .word = w};
  }
  NormalForm nf = detail::essential_form(essentialise(w));
  nf.scale = g;
  nf.shift = a;
  for (auto& x : nf.word.letters) x = w.normalize(g * x + a);
  nf.word.modulus = w.modulus;
  return nf;
}

/// The canonical word of the element represented by w.
inline ReflectionWord reconstruct(const NormalForm& nf) { return nf.word; }

}  // namespace ybe
