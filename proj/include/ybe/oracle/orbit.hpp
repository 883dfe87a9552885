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
 * @file orbit.hpp
 *
 * Brute-force ground truth for structure monoids: the words of each length
 * split into orbits under braiding moves (..., x, y, ...) <-> (..., x > y, x, ...),
 * and the orbits are exactly the monoid elements of that length.
 *
 * Words of length n are encoded as base-|X| integers with the first letter
 * most significant, so numeric order is lexicographic order and the minimal
 * code of an orbit is its lexicographically least word.
 */

#pragma once

#include <ybe/algebra/quandle.hpp>
#include <ybe/algebra/set_partition.hpp>
#include <ybe/budget.hpp>
#include <ybe/reflection/invariants.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybe {

struct OrbitEnumeration {
  std::string solution_id;
  std::size_t alphabet = 0;
  std::size_t max_length = 0;
  /// counts[n] = number of orbits of words of length n, for computed lengths.
  std::vector<std::uint64_t> counts;
  /// Minimal word code of every orbit, ascending, per length.
  std::vector<std::vector<std::uint64_t>> representatives;
  /// orbit_index[n][code] = position of the word's orbit in representatives[n].
  std::vector<std::vector<std::uint32_t>> orbit_index;
  /// False when the budget stopped the enumeration; lengths >= cutoff are missing.
  bool complete = true;
  std::size_t cutoff = 0;

  [[nodiscard]] std::uint64_t encode(const std::vector<Letter>& w) const {
    std::uint64_t code = 0;
    for (const Letter x : w) code = code * alphabet + x;
    return code;
  }

  [[nodiscard]] std::vector<Letter> decode(std::uint64_t code, std::size_t length) const {
    std::vector<Letter> w(length);
    for (std::size_t i = length; i-- > 0;) {
      w[i] = static_cast<Letter>(code % alphabet);
      code /= alphabet;
    }
    return w;
  }

  [[nodiscard]] std::size_t orbit_of(const std::vector<Letter>& w) const {
    if (w.size() >= orbit_index.size()) throw std::out_of_range("word longer than the enumerated lengths");
    return orbit_index[w.size()].at(encode(w));
  }

  [[nodiscard]] std::vector<Letter> representative(std::size_t length, std::size_t orbit) const {
    return decode(representatives.at(length).at(orbit), length);
  }
};

/// Orbits of all words of length 0..max_length. Stops with complete = false
/// once the total number of words would exceed the budget.
inline OrbitEnumeration monoid_orbit_enumerate(const QuandleSolution& sol, std::size_t max_length,
                                               std::uint64_t budget = kDefaultWordBudget,
                                               std::string solution_id = {}) {
  OrbitEnumeration out;
  out.solution_id = std::move(solution_id);
  out.alphabet = sol.size();
  out.max_length = max_length;
  const std::uint64_t q = sol.size();
  if (q == 0) throw std::invalid_argument("empty solution");

  std::uint64_t used = 0;
  std::uint64_t words = 1;
  for (std::size_t n = 0; n <= max_length; ++n) {
    if (n > 0) {
      if (words > budget / q) words = budget + 1;
      else words *= q;
    }
    if (words > budget - used || words > UINT32_MAX) {
      out.complete = false;
      out.cutoff = n;
      return out;
    }
    used += words;

    // place value of position i is q^{n-1-i}
    std::vector<std::uint64_t> place(n);
    for (std::size_t i = n; i-- > 0;) place[i] = i + 1 == n ? 1 : place[i + 1] * q;

    MinUnionFind uf(static_cast<std::size_t>(words));
    std::vector<Letter> w(n, 0);
    for (std::uint64_t code = 0; code < words; ++code) {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const Letter x = w[i], y = w[i + 1];
        const Letter z = sol.op(x, y);
        if (z == x && x == y) continue;
        // (x, y) -> (x > y, x)
        const std::uint64_t moved = code + place[i] * z + place[i + 1] * x - place[i] * x - place[i + 1] * y;
        uf.unite(static_cast<std::size_t>(code), static_cast<std::size_t>(moved));
      }
      for (std::size_t i = n; i-- > 0;) {
        if (++w[i] < q) break;
        w[i] = 0;
      }
    }

    std::vector<std::uint32_t> index(static_cast<std::size_t>(words));
    std::vector<std::uint64_t> reps;
    for (std::uint64_t code = 0; code < words; ++code) {
      const std::size_t root = uf.find(static_cast<std::size_t>(code));
      if (root == code) {
        index[code] = static_cast<std::uint32_t>(reps.size());
        reps.push_back(code);
      } else {
        index[code] = index[root];
      }
    }
    out.counts.push_back(reps.size());
    out.representatives.push_back(std::move(reps));
    out.orbit_index.push_back(std::move(index));
  }
  out.cutoff = max_length + 1;
  return out;
}

/// Whether w2 is reachable from w1 by braiding moves in either direction.
inline bool orbit_equal(const QuandleSolution& sol, const std::vector<Letter>& w1, const std::vector<Letter>& w2,
                        std::uint64_t budget = kDefaultWordBudget) {
  if (w1.size() != w2.size()) return false;
  if (w1 == w2) return true;
  std::set<std::vector<Letter>> seen{w1};
  std::deque<std::vector<Letter>> queue{w1};
  while (!queue.empty()) {
    const std::vector<Letter> w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        std::vector<Letter> v = w;
        if (dir == 0) {
          v[i] = sol.op(w[i], w[i + 1]);
          v[i + 1] = w[i];
        } else {
          v[i] = w[i + 1];
          v[i + 1] = sol.op_inverse(w[i + 1], w[i]);
        }
        if (v == w2) return true;
        if (seen.insert(v).second) {
          if (seen.size() > budget) throw BudgetExceeded("orbit search exceeded its state budget");
          queue.push_back(std::move(v));
        }
      }
    }
  }
  return false;
}

struct WindowedOrbitResult {
  bool equal = false;
  /// Margin M of the last window [min - M, max + M] searched.
  std::int64_t margin = 0;
  /// False answers repeated over the last two window doublings.
  bool stabilized = false;
};

/// Orbit equality over the infinite reflection solution, searched inside a
/// letter window that doubles until a witness appears or the negative answer
/// has been seen for two successive doublings beyond the first.
inline WindowedOrbitResult infinite_reflection_orbit_equal(const ReflectionWord& w1, const ReflectionWord& w2,
                                                           std::uint64_t budget = kDefaultWordBudget) {
  if (!w1.is_infinite() || !w2.is_infinite()) throw std::invalid_argument("words must be over Z");
  WindowedOrbitResult res;
  if (w1.letters.size() != w2.letters.size()) {
    res.stabilized = true;
    return res;
  }
  if (w1.letters == w2.letters) {
    res.equal = true;
    return res;
  }
  std::int64_t lo = INT64_MAX, hi = INT64_MIN;
  for (const auto* w : {&w1, &w2})
    for (const auto x : w->letters) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  int misses = 0;
  for (std::int64_t margin = 4;; margin *= 2) {
    res.margin = margin;
    const std::int64_t a = lo - margin, b = hi + margin;
    std::set<std::vector<std::int64_t>> seen{w1.letters};
    std::deque<std::vector<std::int64_t>> queue{w1.letters};
    bool over = false;
    while (!queue.empty() && !res.equal && !over) {
      const auto w = std::move(queue.front());
      queue.pop_front();
      for (std::size_t i = 0; i + 1 < w.size() && !res.equal; ++i) {
        for (int dir = 0; dir < 2; ++dir) {
          auto v = w;
          if (dir == 0) {
            v[i] = 2 * w[i] - w[i + 1];
            v[i + 1] = w[i];
          } else {
            v[i] = w[i + 1];
            v[i + 1] = 2 * w[i + 1] - w[i];
          }
          if (v[i] < a || v[i] > b || v[i + 1] < a || v[i + 1] > b) continue;
          if (v == w2.letters) {
            res.equal = true;
            break;
          }
          if (seen.insert(v).second) {
            if (seen.size() > budget) over = true;
            queue.push_back(std::move(v));
          }
        }
      }
    }
    if (res.equal) return res;
    if (over) throw BudgetExceeded("windowed orbit search exceeded its state budget");
    if (++misses >= 3) {
      res.stabilized = true;
      return res;
    }
  }
}

}  // namespace ybe
