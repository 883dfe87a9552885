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

#include <ybe/series/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybe {

/// Union-find whose root is always the smallest member.
class MinUnionFind {
 public:
  explicit MinUnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true when two classes were merged.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  [[nodiscard]] std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

/// Partition of {0, ..., d-1}; blocks sorted internally and by minimum.
class SetPartition {
 public:
  SetPartition() = default;

  explicit SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    std::size_t total = 0;
    for (auto& b : blocks_) {
      if (b.empty()) throw std::invalid_argument("empty block");
      std::sort(b.begin(), b.end());
      total += b.size();
    }
    std::sort(blocks_.begin(), blocks_.end());
    std::vector<bool> seen(total);
    for (const auto& b : blocks_)
      for (const int x : b) {
        if (x < 0 || static_cast<std::size_t>(x) >= total || seen[x]) throw std::invalid_argument("blocks do not partition {0..d-1}");
        seen[x] = true;
      }
  }

  /// Block labels per point, e.g. a restricted growth string.
  static SetPartition from_labels(const std::vector<int>& labels) {
    std::map<int, std::vector<int>> by_label;
    for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> blocks;
    for (auto& [label, block] : by_label) blocks.push_back(std::move(block));
    return SetPartition(std::move(blocks));
  }

  static SetPartition from_union_find(MinUnionFind& uf) {
    std::vector<int> labels(uf.size());
    for (std::size_t i = 0; i < uf.size(); ++i) labels[i] = static_cast<int>(uf.find(i));
    return from_labels(labels);
  }

  static SetPartition discrete(int d) {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < d; ++i) blocks.push_back({i});
    return SetPartition(std::move(blocks));
  }

  [[nodiscard]] int ground_size() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.size();
    return static_cast<int>(n);
  }
  [[nodiscard]] const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  [[nodiscard]] std::size_t block_count() const { return blocks_.size(); }

  /// Block sizes in descending order.
  [[nodiscard]] std::vector<int> shape() const {
    std::vector<int> s;
    for (const auto& b : blocks_) s.push_back(static_cast<int>(b.size()));
    std::sort(s.rbegin(), s.rend());
    return s;
  }

  /// 1-based, e.g. {{1,2,3},{4,5}}.
  [[nodiscard]] std::string to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      s += k ? ",{" : "{";
      for (std::size_t i = 0; i < blocks_[k].size(); ++i) s += (i ? "," : "") + std::to_string(blocks_[k][i] + 1);
      s += "}";
    }
    return s + "}";
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

/// Finest common coarsening.
inline SetPartition partitions_join(const SetPartition& p, const SetPartition& q) {
  if (p.ground_size() != q.ground_size()) throw std::invalid_argument("partitions of different ground sets");
  MinUnionFind uf(static_cast<std::size_t>(p.ground_size()));
  for (const auto* part : {&p, &q})
    for (const auto& b : part->blocks())
      for (std::size_t i = 1; i < b.size(); ++i) uf.unite(static_cast<std::size_t>(b[0]), static_cast<std::size_t>(b[i]));
  return SetPartition::from_union_find(uf);
}

/// All set partitions of {0..d-1}, via restricted growth strings.
inline std::vector<SetPartition> enumerate_set_partitions(int d) {
  if (d < 0) throw std::invalid_argument("negative ground set size");
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(d));
  auto rec = [&](auto&& self, int pos, int max_label) -> void {
    if (pos == d) {
      out.push_back(SetPartition::from_labels(rgs));
      return;
    }
    for (int v = 0; v <= max_label + 1; ++v) {
      rgs[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, std::max(max_label, v));
    }
  };
  rec(rec, 0, -1);
  return out;
}

/// Integer partitions of d, parts in descending order, partitions in reverse
/// lexicographic order.
inline std::vector<std::vector<int>> integer_partitions(int d) {
  if (d < 0) throw std::invalid_argument("negative integer");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

/// Number of set partitions of a d-set with block sizes lambda:
/// d! / (prod lambda_i! * prod_m mu_m!), mu_m = number of parts equal to m.
inline Integer integer_partition_multiplicity(const std::vector<int>& lambda, int d) {
  if (std::accumulate(lambda.begin(), lambda.end(), 0) != d) throw std::invalid_argument("partition does not sum to d");
  Rational r = factorial(static_cast<unsigned>(d));
  std::map<int, unsigned> mu;
  for (const int part : lambda) {
    if (part <= 0) throw std::invalid_argument("parts must be positive");
    r /= factorial(static_cast<unsigned>(part));
    ++mu[part];
  }
  for (const auto& [part, count] : mu) r /= factorial(count);
  return to_integer(r);
}

}  // namespace ybe
