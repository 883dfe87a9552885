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

#include <ybe/algebra/group_table.hpp>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ybe {

/// Set of conjugacy classes, one bit per class index.
using ClassMask = std::uint64_t;

inline constexpr std::size_t kMaxClasses = 64;

struct ConjugacyDecomposition {
  std::vector<std::size_t> class_of;               // element -> class index
  std::vector<std::vector<Element>> classes;       // sorted element lists
  std::vector<std::size_t> inverse_class;          // class of x^{-1} for x in the class

  [[nodiscard]] std::size_t count() const { return classes.size(); }
  [[nodiscard]] std::size_t size(std::size_t i) const { return classes[i].size(); }
  [[nodiscard]] Element representative(std::size_t i) const { return classes[i].front(); }

  [[nodiscard]] bool all_self_inverse() const {
    for (std::size_t i = 0; i < inverse_class.size(); ++i)
      if (inverse_class[i] != i) return false;
    return true;
  }

  /// Total number of elements in the classes of a mask.
  [[nodiscard]] std::uint64_t mask_size(ClassMask m) const {
    std::uint64_t s = 0;
    for (; m != 0; m &= m - 1) s += classes[static_cast<std::size_t>(std::countr_zero(m))].size();
    return s;
  }
};

/// Class 0 is {1}; the others follow in ascending (size, smallest element).
inline ConjugacyDecomposition conjugacy_classes(const FiniteGroupTable& g) {
  const std::size_t n = g.order();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit_of(n, kUnset);
  std::vector<std::vector<Element>> orbits;
  for (Element x = 0; x < n; ++x) {
    if (orbit_of[x] != kUnset) continue;
    std::vector<Element> orbit{x};
    orbit_of[x] = orbits.size();
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const Element s : g.generators()) {
        const Element y = g.conj(s, orbit[head]);
        if (orbit_of[y] == kUnset) {
          orbit_of[y] = orbits.size();
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::stable_sort(orbits.begin() + 1, orbits.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  ConjugacyDecomposition dec;
  dec.class_of.assign(n, 0);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (const Element x : orbits[i]) dec.class_of[x] = i;
  dec.classes = std::move(orbits);
  for (std::size_t i = 0; i < dec.classes.size(); ++i)
    dec.inverse_class.push_back(dec.class_of[g.inv(dec.representative(i))]);
  return dec;
}

/// Entry (i, j) is the mask of classes meeting C_i C_j.
class ClassProductTable {
 public:
  ClassProductTable(const FiniteGroupTable& g, const ConjugacyDecomposition& dec) : c_(dec.count()) {
    if (c_ > kMaxClasses) throw std::invalid_argument("more than 64 conjugacy classes");
    table_.assign(c_ * c_, 0);
    // C_i C_j is a union of classes, and every class in it already meets a C_j
    // for a fixed a in C_i.
    for (std::size_t i = 0; i < c_; ++i) {
      const Element a = dec.representative(i);
      for (std::size_t j = 0; j < c_; ++j) {
        ClassMask m = 0;
        for (const Element b : dec.classes[j]) m |= ClassMask{1} << dec.class_of[g.mult(a, b)];
        table_[i * c_ + j] = m;
      }
    }
  }

  [[nodiscard]] std::size_t classes() const { return c_; }
  [[nodiscard]] ClassMask at(std::size_t i, std::size_t j) const { return table_[i * c_ + j]; }

  /// Classes meeting (union of A) * (union of B).
  [[nodiscard]] ClassMask multiply(ClassMask a, ClassMask b) const {
    ClassMask out = 0;
    for (ClassMask x = a; x != 0; x &= x - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(x));
      for (ClassMask y = b; y != 0; y &= y - 1) out |= at(i, static_cast<std::size_t>(std::countr_zero(y)));
    }
    return out;
  }

 private:
  std::size_t c_;
  std::vector<ClassMask> table_;
};

inline ClassProductTable class_product_table(const FiniteGroupTable& g, const ConjugacyDecomposition& dec) {
  return {g, dec};
}

/// Membership vector of the smallest normal subgroup containing the given
/// elements, found by closing under products and conjugation by generators.
inline std::vector<bool> normal_closure(const FiniteGroupTable& g, std::vector<Element> seeds) {
  std::vector<bool> in(g.order());
  std::vector<Element> members{g.identity()};
  in[g.identity()] = true;
  // conjugation-closed generating set first
  std::vector<bool> seed_in(g.order());
  for (std::size_t head = 0; head < seeds.size(); ++head) {
    if (seed_in[seeds[head]]) continue;
    seed_in[seeds[head]] = true;
    for (const Element s : g.generators()) seeds.push_back(g.conj(s, seeds[head]));
  }
  std::vector<Element> gens;
  for (Element x = 0; x < g.order(); ++x)
    if (seed_in[x] && x != g.identity()) gens.push_back(x);
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const Element s : gens) {
      const Element y = g.mult(members[head], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return in;
}

/// [G, G] as a sorted element list.
inline std::vector<Element> commutator_subgroup(const FiniteGroupTable& g) {
  std::vector<Element> seeds;
  for (const Element a : g.generators())
    for (const Element b : g.generators()) seeds.push_back(g.commutator(a, b));
  const auto in = normal_closure(g, seeds);
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

/// True iff every element of [G, G] is a single commutator.
///
/// [x, y] = (x y x^{-1}) y^{-1}, so the commutators with y conjugate to b are
/// the conjugates of { z b^{-1} : z in class(b) }.
inline bool has_commutator_length_one(const FiniteGroupTable& g, const ConjugacyDecomposition& dec) {
  std::vector<bool> hit_class(dec.count());
  for (std::size_t i = 0; i < dec.count(); ++i) {
    const Element binv = g.inv(dec.representative(i));
    for (const Element z : dec.classes[i]) hit_class[dec.class_of[g.mult(z, binv)]] = true;
  }
  std::size_t commutators = 0;
  for (std::size_t i = 0; i < dec.count(); ++i)
    if (hit_class[i]) commutators += dec.size(i);
  return commutators == commutator_subgroup(g).size();
}

}  // namespace ybe
