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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybe {

/// Permutation of {0, ..., d-1} stored by images. Products compose right to
/// left: (g * h)(i) = g(h(i)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size());
    for (const int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v]) {
        throw std::invalid_argument("not a permutation");
      }
      seen[v] = true;
    }
  }

  static Permutation identity(int d) {
    std::vector<int> im(static_cast<std::size_t>(d));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  static Permutation transposition(int d, int i, int j) {
    Permutation p = identity(d);
    std::swap(p.images_.at(i), p.images_.at(j));
    return p;
  }

  [[nodiscard]] int degree() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const std::vector<int>& images() const { return images_; }

  [[nodiscard]] bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i)) return false;
    return true;
  }

  [[nodiscard]] Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
    Permutation p;
    p.images_ = std::move(inv);
    return p;
  }

  /// Number of cycles, fixed points included.
  [[nodiscard]] int cycle_count() const {
    std::vector<bool> seen(images_.size());
    int cycles = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
    }
    return cycles;
  }

  /// Transposition length d - c(g).
  [[nodiscard]] int transposition_length() const { return degree() - cycle_count(); }

  /// Non-trivial cycles, each starting at its minimum, ordered by minimum.
  [[nodiscard]] std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == static_cast<int>(i)) continue;
      std::vector<int> cyc;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        cyc.push_back(static_cast<int>(j));
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Cycle notation with 1-based points; "()" for the identity.
  [[nodiscard]] std::string to_string() const {
    const auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::string s;
    for (const auto& c : cyc) {
      s += "(";
      for (std::size_t k = 0; k < c.size(); ++k) s += (k ? " " : "") + std::to_string(c[k] + 1);
      s += ")";
    }
    return s;
  }

  /// Lexicographic rank among all permutations of the same degree.
  [[nodiscard]] std::uint64_t rank() const {
    std::uint64_t r = 0;
    const std::size_t d = images_.size();
    for (std::size_t i = 0; i < d; ++i) {
      std::uint64_t smaller = 0;
      for (std::size_t j = i + 1; j < d; ++j)
        if (images_[j] < images_[i]) ++smaller;
      r = r * (d - i) + smaller;
    }
    return r;
  }

  static Permutation unrank(int d, std::uint64_t r) {
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(d));
    for (int i = d - 1; i >= 0; --i) {
      const auto base = static_cast<std::uint64_t>(d - i);
      digits[static_cast<std::size_t>(i)] = r % base;
      r /= base;
    }
    std::vector<int> pool(static_cast<std::size_t>(d));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> im;
    for (int i = 0; i < d; ++i) {
      const auto k = static_cast<std::ptrdiff_t>(digits[static_cast<std::size_t>(i)]);
      im.push_back(pool[static_cast<std::size_t>(k)]);
      pool.erase(pool.begin() + k);
    }
    return Permutation(std::move(im));
  }

  friend Permutation operator*(const Permutation& g, const Permutation& h) {
    if (g.images_.size() != h.images_.size()) throw std::invalid_argument("degree mismatch");
    Permutation p;
    p.images_.resize(g.images_.size());
    for (std::size_t i = 0; i < g.images_.size(); ++i) p.images_[i] = g.images_[h.images_[i]];
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace ybe
