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
 * @file ball.hpp
 *
 * Sphere sizes of a structure group, read off from its image in G x Z^r. A
 * conjugation-closed subset X of G embeds via e_x -> (x, 1_i) where i indexes
 * the orbit of x under conjugation by X; breadth-first search from the
 * identity over these generators and their inverses counts group elements by
 * word length.
 */

#pragma once

#include <ybe/algebra/group_table.hpp>
#include <ybe/algebra/set_partition.hpp>
#include <ybe/budget.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

namespace ybe {

struct BallGenerator {
  Element element;
  std::vector<std::int64_t> lattice;
};

struct BallEnumeration {
  std::vector<BallGenerator> generators;
  std::size_t radius = 0;
  /// sphere_sizes[n] = number of elements at distance exactly n.
  std::vector<std::uint64_t> sphere_sizes;
};

/// Generators (x, 1_i) for x in subset, i the orbit of x under conjugation
/// by the subset; orbits are numbered by their least element.
inline std::vector<BallGenerator> conjugation_embedding(const FiniteGroupTable& g, std::vector<Element> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::map<Element, std::size_t> pos;
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = i;
  MinUnionFind uf(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (const Element y : subset) {
      const auto it = pos.find(g.conj(y, subset[i]));
      if (it == pos.end()) throw std::invalid_argument("subset not closed under conjugation");
      uf.unite(i, it->second);
    }
  std::map<std::size_t, std::size_t> coordinate;
  for (std::size_t i = 0; i < subset.size(); ++i) coordinate.emplace(uf.find(i), coordinate.size());
  std::vector<BallGenerator> gens;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    std::vector<std::int64_t> v(coordinate.size(), 0);
    v[coordinate.at(uf.find(i))] = 1;
    gens.push_back({subset[i], std::move(v)});
  }
  return gens;
}

/// Breadth-first search in G x Z^r over the generators and their inverses.
/// Lattice coordinates are bounded by radius * max |entry|, which keeps the
/// search exact; the dense state space must fit in the budget.
inline BallEnumeration group_ball_enumerate(const FiniteGroupTable& g, const std::vector<BallGenerator>& gens,
                                            std::size_t radius, std::uint64_t budget = kDefaultBallBudget) {
  if (gens.empty()) throw std::invalid_argument("ball enumeration needs generators");
  const std::size_t rank = gens.front().lattice.size();
  std::int64_t step = 0;
  for (const auto& gen : gens) {
    if (gen.lattice.size() != rank) throw std::invalid_argument("lattice vectors of different rank");
    for (const auto v : gen.lattice) step = std::max<std::int64_t>(step, std::llabs(v));
  }
  const std::int64_t bound = step * static_cast<std::int64_t>(radius);
  const auto side = static_cast<std::uint64_t>(2 * bound + 1);
  std::uint64_t cells = g.order();
  for (std::size_t i = 0; i < rank; ++i) {
    if (cells > budget / side) throw BudgetExceeded("ball enumeration exceeds its state budget");
    cells *= side;
  }
  if (cells > budget) throw BudgetExceeded("ball enumeration exceeds its state budget");

  // moves: generators then inverses; lattice offset as a code delta
  struct Move {
    Element element;
    std::vector<std::int64_t> lattice;
  };
  std::vector<Move> moves;
  for (const auto& gen : gens) moves.push_back({gen.element, gen.lattice});
  for (const auto& gen : gens) {
    std::vector<std::int64_t> neg(gen.lattice);
    for (auto& v : neg) v = -v;
    moves.push_back({g.inv(gen.element), std::move(neg)});
  }

  const std::uint64_t lattice_cells = cells / g.order();
  auto encode = [&](Element e, const std::vector<std::int64_t>& k) {
    std::uint64_t code = 0;
    for (std::size_t i = rank; i-- > 0;) code = code * side + static_cast<std::uint64_t>(k[i] + bound);
    return static_cast<std::uint64_t>(e) * lattice_cells + code;
  };
  auto decode = [&](std::uint64_t code, std::vector<std::int64_t>& k) {
    const auto e = static_cast<Element>(code / lattice_cells);
    code %= lattice_cells;
    for (std::size_t i = 0; i < rank; ++i) {
      k[i] = static_cast<std::int64_t>(code % side) - bound;
      code /= side;
    }
    return e;
  };

  BallEnumeration out;
  out.generators = gens;
  out.radius = radius;
  std::vector<bool> seen(static_cast<std::size_t>(cells), false);
  std::vector<std::int64_t> origin(rank, 0), k(rank), next(rank);
  std::vector<std::uint64_t> frontier{encode(g.identity(), origin)};
  seen[frontier.front()] = true;
  out.sphere_sizes.push_back(1);
  for (std::size_t n = 1; n <= radius; ++n) {
    std::vector<std::uint64_t> grown;
    for (const std::uint64_t s : frontier) {
      const Element e = decode(s, k);
      for (const auto& mv : moves) {
        for (std::size_t i = 0; i < rank; ++i) next[i] = k[i] + mv.lattice[i];
        const std::uint64_t t = encode(g.mult(e, mv.element), next);
        if (!seen[t]) {
          seen[t] = true;
          grown.push_back(t);
        }
      }
    }
    out.sphere_sizes.push_back(grown.size());
    frontier = std::move(grown);
  }
  return out;
}

}  // namespace ybe
