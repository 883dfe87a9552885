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
 * @file group_table.hpp
 *
 * Finite groups given by multiplication tables. Element 0 is always the
 * identity. Small groups keep a dense n x n table; larger permutation groups
 * (S_7, S_8) multiply on demand through their permutations.
 */

#pragma once

#include <ybe/algebra/permutation.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybe {

using Element = std::uint32_t;

class FiniteGroupTable {
 public:
  /// Largest order for which the full table is stored.
  static constexpr std::size_t kDenseLimit = 2048;
  /// Largest order for which group axioms are checked on construction.
  static constexpr std::size_t kValidateLimit = 10000;

  using Product = std::function<Element(Element, Element)>;

  /// Builds from a product rule; materializes the table when small.
  FiniteGroupTable(std::size_t n, const Product& mult, std::vector<std::string> labels,
                   std::vector<Element> generators = {}, bool associative_by_construction = false)
      : n_(n), labels_(std::move(labels)), generators_(std::move(generators)) {
    if (n_ == 0) throw std::invalid_argument("empty group");
    if (labels_.size() != n_) throw std::invalid_argument("label count does not match group order");
    if (n_ <= kDenseLimit) {
      table_.resize(n_ * n_);
      for (Element a = 0; a < n_; ++a)
        for (Element b = 0; b < n_; ++b) {
          const Element p = mult(a, b);
          if (p >= n_) throw std::invalid_argument("product out of range");
          table_[a * n_ + b] = p;
        }
    } else {
      lazy_ = mult;
    }
    compute_inverses();
    if (generators_.empty()) generators_ = greedy_generators();
    if (n_ <= kValidateLimit) validate(associative_by_construction);
  }

  /// Builds from an explicit table (row a, column b holds a*b).
  static FiniteGroupTable from_table(const std::vector<std::vector<Element>>& rows,
                                     std::vector<std::string> labels = {}) {
    const std::size_t n = rows.size();
    for (const auto& r : rows)
      if (r.size() != n) throw std::invalid_argument("multiplication table is not square");
    if (labels.empty())
      for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    return {n, [&rows](Element a, Element b) { return rows[a][b]; }, std::move(labels)};
  }

  [[nodiscard]] std::size_t order() const { return n_; }
  [[nodiscard]] Element identity() const { return 0; }

  [[nodiscard]] Element mult(Element a, Element b) const {
    return lazy_ ? lazy_(a, b) : table_[static_cast<std::size_t>(a) * n_ + b];
  }
  [[nodiscard]] Element inv(Element a) const { return inverse_[a]; }
  /// a b a^{-1}
  [[nodiscard]] Element conj(Element a, Element b) const { return mult(mult(a, b), inverse_[a]); }
  /// a b a^{-1} b^{-1}
  [[nodiscard]] Element commutator(Element a, Element b) const {
    return mult(mult(a, b), mult(inverse_[a], inverse_[b]));
  }

  [[nodiscard]] const std::string& label(Element a) const { return labels_.at(a); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<Element>& generators() const { return generators_; }
  [[nodiscard]] bool dense() const { return !lazy_; }

  /// Subgroup generated by a set, as a membership vector.
  [[nodiscard]] std::vector<bool> generated_subgroup(const std::vector<Element>& gens) const {
    std::vector<bool> in(n_);
    std::vector<Element> queue{identity()};
    in[identity()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Element g : gens) {
        const Element x = mult(queue[head], g);
        if (!in[x]) {
          in[x] = true;
          queue.push_back(x);
        }
      }
    }
    return in;
  }

 private:
  void compute_inverses() {
    inverse_.assign(n_, 0);
    std::vector<bool> found(n_);
    for (Element a = 0; a < n_; ++a) {
      if (found[a]) continue;
      // the power of a just before the identity is a^{-1}
      Element x = a;
      std::size_t steps = 0;
      while (a != identity() && mult(x, a) != identity()) {
        x = mult(x, a);
        if (++steps > n_) throw std::invalid_argument("element 0 is not reached by powers: not a group");
      }
      inverse_[a] = a == identity() ? identity() : x;
      inverse_[inverse_[a]] = a;
      found[a] = found[inverse_[a]] = true;
    }
  }

  [[nodiscard]] std::vector<Element> greedy_generators() const {
    std::vector<Element> gens;
    std::vector<bool> in = generated_subgroup(gens);
    for (Element a = 0; a < n_; ++a) {
      if (in[a]) continue;
      gens.push_back(a);
      in = generated_subgroup(gens);
    }
    return gens;
  }

  // Identity, inverses, Latin rows and Light's associativity test over the
  // generators: (x g) y == x (g y) for all x, y and generators g suffices.
  void validate(bool associative_by_construction) const {
    for (Element a = 0; a < n_; ++a) {
      if (mult(identity(), a) != a || mult(a, identity()) != a) throw std::invalid_argument("element 0 is not the identity");
      if (mult(a, inverse_[a]) != identity() || mult(inverse_[a], a) != identity())
        throw std::invalid_argument("missing inverse");
    }
    if (!dense() || associative_by_construction) return;
    for (Element a = 0; a < n_; ++a) {
      std::vector<bool> row(n_), col(n_);
      for (Element b = 0; b < n_; ++b) {
        if (row[mult(a, b)] || col[mult(b, a)]) throw std::invalid_argument("table is not a Latin square");
        row[mult(a, b)] = col[mult(b, a)] = true;
      }
    }
    for (const Element g : generators_)
      for (Element x = 0; x < n_; ++x)
        for (Element y = 0; y < n_; ++y)
          if (mult(mult(x, g), y) != mult(x, mult(g, y))) throw std::invalid_argument("table is not associative");
  }

  std::size_t n_;
  std::vector<Element> table_;
  Product lazy_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::vector<Element> generators_;
};

/// S_d with elements in lexicographic order of their image arrays.
inline FiniteGroupTable make_symmetric_group(int d) {
  if (d < 1 || d > 8) throw std::invalid_argument("symmetric group degree must be in [1, 8]");
  std::uint64_t n = 1;
  for (int k = 2; k <= d; ++k) n *= static_cast<std::uint64_t>(k);
  auto perms = std::make_shared<std::vector<Permutation>>();
  std::vector<std::string> labels;
  for (std::uint64_t r = 0; r < n; ++r) {
    perms->push_back(Permutation::unrank(d, r));
    labels.push_back(perms->back().to_string());
  }
  std::vector<Element> gens;
  if (d >= 2) {
    gens.push_back(static_cast<Element>(Permutation::transposition(d, 0, 1).rank()));
    std::vector<int> cyc(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % d;
    gens.push_back(static_cast<Element>(Permutation(cyc).rank()));
  }
  return {n,
          [perms](Element a, Element b) { return static_cast<Element>(((*perms)[a] * (*perms)[b]).rank()); },
          std::move(labels), std::move(gens), true};
}

/// Permutation of the element with index a in make_symmetric_group(d).
inline Permutation symmetric_element(int d, Element a) { return Permutation::unrank(d, a); }
inline Element symmetric_index(const Permutation& p) { return static_cast<Element>(p.rank()); }

/// D_d acting on Z_d: index k < d is the rotation x -> x + k, index d + j is
/// the reflection x -> j - x.
inline FiniteGroupTable make_dihedral_group(int d) {
  if (d < 1 || d > 1000) throw std::invalid_argument("dihedral group degree must be in [1, 1000]");
  const auto dd = static_cast<Element>(d);
  auto md = [dd](std::int64_t x) { return static_cast<Element>(((x % dd) + dd) % dd); };
  std::vector<std::string> labels;
  for (int k = 0; k < d; ++k) labels.push_back(k == 0 ? "1" : "r^" + std::to_string(k));
  for (int j = 0; j < d; ++j) labels.push_back("s_" + std::to_string(j));
  std::vector<Element> gens;
  if (d >= 2) gens.push_back(1);
  gens.push_back(dd);
  return {2 * static_cast<std::size_t>(d),
          [dd, md](Element a, Element b) -> Element {
            const bool ra = a < dd, rb = b < dd;
            const std::int64_t i = ra ? a : a - dd, j = rb ? b : b - dd;
            if (ra && rb) return md(i + j);
            if (ra) return dd + md(j + i);     // rot_i . ref_j : x -> j - x + i
            if (rb) return dd + md(i - j);     // ref_i . rot_j : x -> i - x - j
            return md(i - j);                  // ref_i . ref_j : x -> x + i - j
          },
          std::move(labels), std::move(gens), true};
}

}  // namespace ybe
