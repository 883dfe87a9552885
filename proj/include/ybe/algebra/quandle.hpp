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
 * @file quandle.hpp
 *
 * Quandle-type solutions r(x, y) = (x > y, x) of the set-theoretic
 * Yang-Baxter equation. The solution is non-degenerate exactly when every
 * left translation y -> x > y is a bijection, and satisfies the braid
 * relation exactly when > is self-distributive.
 */

#pragma once

#include <ybe/algebra/conjugacy.hpp>
#include <ybe/algebra/group_table.hpp>
#include <ybe/algebra/permutation.hpp>
#include <ybe/series/json.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybe {

using Letter = std::uint32_t;

class QuandleSolution {
 public:
  /// Self-distributivity is checked on all triples up to this size.
  static constexpr std::size_t kExhaustiveLimit = 256;

  QuandleSolution(std::size_t n, std::vector<Letter> op, std::vector<std::string> labels = {})
      : n_(n), op_(std::move(op)), labels_(std::move(labels)) {
    if (op_.size() != n_ * n_) throw std::invalid_argument("operation table has wrong size");
    if (labels_.empty())
      for (std::size_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    if (labels_.size() != n_) throw std::invalid_argument("label count does not match solution size");
    validate();
  }

  [[nodiscard]] std::size_t size() const { return n_; }
  /// x > y
  [[nodiscard]] Letter op(Letter x, Letter y) const { return op_[static_cast<std::size_t>(x) * n_ + y]; }
  /// The unique z with x > z = y.
  [[nodiscard]] Letter op_inverse(Letter x, Letter y) const { return inv_[static_cast<std::size_t>(x) * n_ + y]; }
  [[nodiscard]] const std::string& label(Letter x) const { return labels_.at(x); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<Letter>& table() const { return op_; }

  /// r(x, y) = (x > y, x)
  [[nodiscard]] std::pair<Letter, Letter> r(Letter x, Letter y) const { return {op(x, y), x}; }

  /// x > (x > y) = y for all x, y.
  [[nodiscard]] bool involutory() const {
    for (Letter x = 0; x < n_; ++x)
      for (Letter y = 0; y < n_; ++y)
        if (op(x, op(x, y)) != y) return false;
    return true;
  }

 private:
  void validate() {
    inv_.assign(n_ * n_, 0);
    for (Letter x = 0; x < n_; ++x) {
      std::vector<bool> hit(n_);
      for (Letter y = 0; y < n_; ++y) {
        const Letter z = op(x, y);
        if (z >= n_ || hit[z]) throw std::invalid_argument("left translation is not a bijection");
        hit[z] = true;
        inv_[static_cast<std::size_t>(x) * n_ + z] = y;
      }
      if (op(x, x) != x) throw std::invalid_argument("operation is not idempotent");
    }
    auto check = [this](Letter x, Letter y, Letter z) {
      if (op(x, op(y, z)) != op(op(x, y), op(x, z))) {
        throw std::invalid_argument("operation is not self-distributive: no Yang-Baxter solution");
      }
    };
    if (n_ <= kExhaustiveLimit) {
      for (Letter x = 0; x < n_; ++x)
        for (Letter y = 0; y < n_; ++y)
          for (Letter z = 0; z < n_; ++z) check(x, y, z);
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<Letter> pick(0, static_cast<Letter>(n_ - 1));
      for (int k = 0; k < 1 << 22; ++k) check(pick(rng), pick(rng), pick(rng));
    }
  }

  std::size_t n_;
  std::vector<Letter> op_;
  std::vector<Letter> inv_;
  std::vector<std::string> labels_;
};

/// x > y = x y x^{-1} on a subset closed under its own conjugation. Letter i
/// is the i-th smallest element of the subset.
inline QuandleSolution conjugation_solution(const FiniteGroupTable& g, std::vector<Element> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<std::int64_t> pos(g.order(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<std::int64_t>(i);
  const std::size_t n = subset.size();
  std::vector<Letter> op(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t p = pos[g.conj(subset[i], subset[j])];
      if (p < 0) throw std::invalid_argument("subset not closed under conjugation");
      op[i * n + j] = static_cast<Letter>(p);
    }
  std::vector<std::string> labels;
  for (const Element x : subset) labels.push_back(g.label(x));
  return {n, std::move(op), std::move(labels)};
}

/// Whole group under conjugation.
inline QuandleSolution full_conjugation_solution(const FiniteGroupTable& g) {
  std::vector<Element> all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;
  return conjugation_solution(g, std::move(all));
}

/// Z_d with x > y = 2x - y.
inline QuandleSolution reflection_solution(int d) {
  if (d < 1) throw std::invalid_argument("reflection solution needs d >= 1");
  const auto n = static_cast<std::size_t>(d);
  std::vector<Letter> op(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) op[x * n + y] = static_cast<Letter>((2 * x + n - y) % n);
  return {n, std::move(op)};
}

/// Transposition (i, j), i < j, 0-based, in lexicographic order.
struct Transposition {
  int i;
  int j;
  friend bool operator==(const Transposition&, const Transposition&) = default;
};

inline std::vector<Transposition> transpositions(int d) {
  std::vector<Transposition> out;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) out.push_back({i, j});
  return out;
}

/// Letter index of (i, j) in transposition_solution(d); either order accepted.
inline Letter transposition_index(int d, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= d || j >= d) throw std::invalid_argument("invalid transposition");
  if (i > j) std::swap(i, j);
  // pairs with a smaller first point come first
  return static_cast<Letter>(i * d - i * (i + 1) / 2 + (j - i - 1));
}

/// T_d: transpositions of S_d under conjugation, labels 1-based "(i,j)".
inline QuandleSolution transposition_solution(int d) {
  if (d < 2) throw std::invalid_argument("transposition solution needs d >= 2");
  const auto ts = transpositions(d);
  const std::size_t n = ts.size();
  std::vector<Letter> op(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto s = Permutation::transposition(d, ts[x].i, ts[x].j);
    for (std::size_t y = 0; y < n; ++y) op[x * n + y] = transposition_index(d, s(ts[y].i), s(ts[y].j));
  }
  std::vector<std::string> labels;
  for (const auto& t : ts) labels.push_back("(" + std::to_string(t.i + 1) + "," + std::to_string(t.j + 1) + ")");
  return {n, std::move(op), std::move(labels)};
}

/// Operation table and labels as JSON.
inline Json to_json(const QuandleSolution& q) {
  Json j;
  j["size"] = q.size();
  j["labels"] = q.labels();
  Json rows = Json::array();
  for (Letter x = 0; x < q.size(); ++x) {
    Json row = Json::array();
    for (Letter y = 0; y < q.size(); ++y) row.push_back(q.op(x, y));
    rows.push_back(std::move(row));
  }
  j["op"] = std::move(rows);
  return j;
}

/// Reads {"op": [[...], ...], "labels": [...]} with op[x][y] = x > y.
inline QuandleSolution quandle_from_json(const Json& j) {
  const auto& rows = j.at("op");
  const std::size_t n = rows.size();
  std::vector<Letter> op;
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("operation table is not square");
    for (const auto& v : row) {
      const auto value = v.get<std::int64_t>();
      if (value < 0 || static_cast<std::size_t>(value) >= n) throw std::invalid_argument("operation value out of range");
      op.push_back(static_cast<Letter>(value));
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return {n, std::move(op), std::move(labels)};
}

inline Json to_json(const FiniteGroupTable& g) {
  Json j;
  j["order"] = g.order();
  j["labels"] = g.labels();
  if (g.order() <= 128) {
    Json rows = Json::array();
    for (Element a = 0; a < g.order(); ++a) {
      Json row = Json::array();
      for (Element b = 0; b < g.order(); ++b) row.push_back(g.mult(a, b));
      rows.push_back(std::move(row));
    }
    j["mult"] = std::move(rows);
  }
  return j;
}

}  // namespace ybe
