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
#include <ybe/series/truncated_series.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ybe {

struct LengthSeries {
  TruncatedSeries series;
  /// False when some element was not reached within the requested order.
  bool complete;
};

/// Word-length distribution of G with respect to C and C^{-1}, by breadth-first search.
inline LengthSeries generic_length_series(const FiniteGroupTable& g, const std::vector<Element>& gens,
                                          std::size_t max_order) {
  std::vector<Element> sym = gens;
  for (const Element c : gens) sym.push_back(g.inv(c));
  std::vector<bool> seen(g.order());
  std::vector<Element> frontier{g.identity()};
  seen[g.identity()] = true;
  std::size_t reached = 1;
  TruncatedSeries s(max_order);
  s[0] = 1;
  for (std::size_t radius = 1; radius <= max_order && !frontier.empty(); ++radius) {
    std::vector<Element> next;
    for (const Element x : frontier)
      for (const Element c : sym) {
        const Element y = g.mult(x, c);
        if (!seen[y]) {
          seen[y] = true;
          next.push_back(y);
        }
      }
    s[radius] = static_cast<long>(next.size());
    reached += next.size();
    frontier = std::move(next);
  }
  return {std::move(s), reached == g.order()};
}

}  // namespace ybe
