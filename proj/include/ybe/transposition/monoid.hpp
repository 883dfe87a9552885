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
 * @file monoid.hpp
 *
 * The structure monoid of the transposition solution T_d.
 *
 * A word in the letters e_(i,j) determines a graph on {1..d}; its connected
 * components form a set partition that is constant on braiding orbits and
 * multiplies by join. Words whose graph is connected are called full, and a
 * full word is determined up to braiding by its permutation and its length.
 */

#pragma once

#include <ybe/algebra/permutation.hpp>
#include <ybe/algebra/quandle.hpp>
#include <ybe/algebra/set_partition.hpp>
#include <ybe/series/bivariate_series.hpp>
#include <ybe/series/polynomial.hpp>
#include <ybe/series/rational_gf.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybe {

/// Word in the letters e_(i,j); pairs are 0-based and unordered.
using TranspositionWord = std::vector<Transposition>;

inline Transposition make_transposition(int i, int j) {
  if (i == j) throw std::invalid_argument("transposition needs two distinct points");
  return i < j ? Transposition{i, j} : Transposition{j, i};
}

/// "e_(1,2)^2 e_(2,3)" with 1-based points; "1" for the empty word.
inline std::string to_string(const TranspositionWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!s.empty()) s += " ";
    s += "e_(" + std::to_string(w[k].i + 1) + "," + std::to_string(w[k].j + 1) + ")";
    if (run > 1) s += "^" + std::to_string(run);
    k += run;
  }
  return s;
}

/// Letters of transposition_solution(d).
inline std::vector<Letter> to_letters(const TranspositionWord& w, int d) {
  std::vector<Letter> out;
  for (const auto& t : w) out.push_back(transposition_index(d, t.i, t.j));
  return out;
}

inline TranspositionWord from_letters(const std::vector<Letter>& letters, int d) {
  const auto ts = transpositions(d);
  TranspositionWord w;
  for (const Letter x : letters) w.push_back(ts.at(x));
  return w;
}

/// Connected components of the graph with an edge {i, j} per letter.
inline SetPartition word_partition(const TranspositionWord& w, int d) {
  MinUnionFind uf(static_cast<std::size_t>(d));
  for (const auto& t : w) {
    if (t.i < 0 || t.j < 0 || t.i >= d || t.j >= d || t.i == t.j) throw std::invalid_argument("letter out of range");
    uf.unite(static_cast<std::size_t>(t.i), static_cast<std::size_t>(t.j));
  }
  return SetPartition::from_union_find(uf);
}

inline bool is_full(const TranspositionWord& w, int d) { return word_partition(w, d).block_count() <= 1; }

struct FTSImage {
  Permutation perm;
  std::int64_t length;
  friend bool operator==(const FTSImage&, const FTSImage&) = default;
  friend auto operator<=>(const FTSImage&, const FTSImage&) = default;
};

/// (product of the letters, word length).
inline FTSImage fts_embed(const TranspositionWord& w, int d) {
  if (w.empty()) throw std::invalid_argument("fts_embed needs a non-empty word");
  Permutation g = Permutation::identity(d);
  for (const auto& t : w) g = g * Permutation::transposition(d, t.i, t.j);
  return {g, static_cast<std::int64_t>(w.size())};
}

/// (g, m) is the image of a full word of length m >= 1.
inline bool fts_image_membership(const Permutation& g, std::int64_t m, int d) {
  if (d < 2 || m < 1) return false;
  const std::int64_t l = g.transposition_length();
  return m >= 2 * (d - 1) - l && (m - l) % 2 == 0;
}

/// Canonical full word with image (g, m): squares e_(i,i+1)^2 joining the
/// cycles of g along the chain 1-2-...-d in ascending order, surplus squares
/// on e_(d-1,d), then each cycle (a_1 ... a_k) as (a_1 a_2)(a_2 a_3)...
inline TranspositionWord fts_normal_form(const Permutation& g, std::int64_t m, int d) {
  if (!fts_image_membership(g, m, d)) throw std::invalid_argument("(g, m) is not in the image of the full semigroup");
  const auto cycles = g.cycles();
  MinUnionFind uf(static_cast<std::size_t>(d));
  for (const auto& c : cycles)
    for (std::size_t k = 1; k < c.size(); ++k) uf.unite(static_cast<std::size_t>(c[0]), static_cast<std::size_t>(c[k]));
  std::vector<std::int64_t> squares(static_cast<std::size_t>(d - 1));
  std::int64_t used = 0;
  for (int i = 0; i + 1 < d; ++i) {
    if (uf.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1))) {
      squares[static_cast<std::size_t>(i)] = 1;
      ++used;
    }
  }
  squares.back() += (m - g.transposition_length()) / 2 - used;
  TranspositionWord w;
  for (int i = 0; i + 1 < d; ++i)
    for (std::int64_t k = 0; k < 2 * squares[static_cast<std::size_t>(i)]; ++k) w.push_back({i, i + 1});
  for (const auto& c : cycles)
    for (std::size_t k = 1; k < c.size(); ++k) w.push_back(make_transposition(c[k - 1], c[k]));
  return w;
}

/// Canonical word of any element: letters of different blocks commute, so
/// the blocks are written one after another in order of their least point,
/// each in the full normal form of its own points.
inline TranspositionWord transposition_normal_form(const TranspositionWord& w, int d) {
  const SetPartition p = word_partition(w, d);
  TranspositionWord out;
  for (const auto& block : p.blocks()) {
    if (block.size() < 2) continue;
    const int k = static_cast<int>(block.size());
    std::vector<int> local(static_cast<std::size_t>(d), -1);
    for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])] = i;
    TranspositionWord sub;
    for (const auto& t : w)
      if (local[static_cast<std::size_t>(t.i)] >= 0)
        sub.push_back(make_transposition(local[static_cast<std::size_t>(t.i)], local[static_cast<std::size_t>(t.j)]));
    const FTSImage img = fts_embed(sub, k);
    for (const auto& t : fts_normal_form(img.perm, img.length, k))
      out.push_back(make_transposition(block[static_cast<std::size_t>(t.i)], block[static_cast<std::size_t>(t.j)]));
  }
  return out;
}

/// Restricted growth series of the full semigroup FTS_d.
inline RationalGF fts_growth_gf(int d) {
  if (d < 1) throw std::invalid_argument("full semigroup needs d >= 1");
  if (d == 1) return Polynomial::constant(1);
  // t^{d-2} / (1 - t^2) * prod_{k=0}^{d-1} (t + k), with (t + 0)(t + 1) = t(1 + t)
  Polynomial num = Polynomial::monomial(1, static_cast<std::size_t>(d - 1));
  for (int k = 2; k < d; ++k) num *= Polynomial{k, 1};
  return {num, Polynomial{1, -1}};
}

/// Growth series of the structure monoid of T_d, summed over block shapes.
inline RationalGF monoid_growth_transpositions(int d) {
  if (d < 0 || d > 12) throw std::invalid_argument("transposition monoid series needs 0 <= d <= 12");
  if (d == 0) return Polynomial::constant(1);
  RationalGF total(Polynomial{});
  for (const auto& lambda : integer_partitions(d)) {
    RationalGF term = Polynomial::constant(Rational(integer_partition_multiplicity(lambda, d)));
    for (const int part : lambda) term *= fts_growth_gf(part);
    total += term;
  }
  return total;
}

/// sum_d G_d(t) x^d / d! as exp(((1 - t x)^{-t} - 1 - t^4 x) / (t^2 (1 - t^2))).
inline BivariateSeries egf_transposition_monoids(std::size_t order_t, std::size_t order_x) {
  const BivariateSeries binom = bivariate_binomial(order_t + 2, order_x);
  BivariateSeries inner(order_t, order_x);
  for (std::size_t j = 0; j <= order_x; ++j) {
    // numerator coefficient of x^j, as a polynomial in t
    std::vector<Rational> c(order_t + 3);
    for (std::size_t i = 0; i <= order_t + 2; ++i) c[i] = binom.at(i, j);
    if (j == 0) c[0] -= 1;
    if (j == 1 && order_t + 2 >= 4) c[4] -= 1;
    if (c[0] != 0 || c[1] != 0) throw InternalError("EGF numerator is not divisible by t^2");
    // divide by t^2, then by (1 - t^2) as the series sum_k t^{2k}
    for (std::size_t i = 0; i <= order_t; ++i) {
      Rational acc = 0;
      for (std::size_t k = i % 2; k <= i; k += 2) acc += c[k + 2];
      inner.at(i, j) = acc;
    }
  }
  return bivariate_exp(inner);
}

}  // namespace ybe
