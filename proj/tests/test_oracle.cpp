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


#include <ybe/oracle/ball.hpp>
#include <ybe/oracle/orbit.hpp>
#include <ybe/reflection/normal_form.hpp>

#include <catch_amalgamated.hpp>

using namespace ybe;

namespace {

/// The same quandle with letter x renamed to sigma[x].
QuandleSolution relabel(const QuandleSolution& q, const std::vector<Letter>& sigma) {
  const std::size_t n = q.size();
  std::vector<Letter> inv(n);
  for (Letter x = 0; x < n; ++x) inv[sigma[x]] = x;
  Json rows = Json::array();
  for (Letter x = 0; x < n; ++x) {
    Json row = Json::array();
    for (Letter y = 0; y < n; ++y) row.push_back(sigma[q.op(inv[x], inv[y])]);
    rows.push_back(std::move(row));
  }
  return quandle_from_json(Json{{"op", rows}});
}

}  // namespace

TEST_CASE("orbit counts survive relabeling", "[oracle]") {
  const auto r6 = reflection_solution(6);
  const auto base = monoid_orbit_enumerate(r6, 5);
  const auto cyclic = monoid_orbit_enumerate(relabel(r6, {1, 2, 3, 4, 5, 0}), 5);
  const auto scrambled = monoid_orbit_enumerate(relabel(r6, {4, 0, 5, 2, 3, 1}), 5);
  CHECK(base.counts == cyclic.counts);
  CHECK(base.counts == scrambled.counts);
  CHECK(base.counts == std::vector<std::uint64_t>{1, 6, 15, 24, 30, 36});
}

TEST_CASE("representatives are lexicographically least", "[oracle]") {
  const auto en = monoid_orbit_enumerate(transposition_solution(4), 4);
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::uint64_t code = 0; code < en.orbit_index[n].size(); ++code)
      CHECK(en.representatives[n][en.orbit_index[n][code]] <= code);
  CHECK(en.complete);
  CHECK(en.cutoff == 5);
  CHECK(en.decode(en.encode({1, 0, 5}), 3) == std::vector<Letter>{1, 0, 5});
}

TEST_CASE("braiding moves are involutions for these solutions", "[oracle]") {
  for (const auto& q : {reflection_solution(5), transposition_solution(4)}) {
    REQUIRE(q.involutory());
    for (Letter x = 0; x < q.size(); ++x)
      for (Letter y = 0; y < q.size(); ++y) {
        // (x, y) -> (x > y, x) -> ((x > y) > x, x > y)
        const Letter a = q.op(x, y);
        CHECK(q.op(a, x) == q.op(q.op(x, y), x));
        CHECK(q.op(x, q.op(x, y)) == y);
      }
  }
}

TEST_CASE("the budget cuts the enumeration", "[oracle]") {
  const auto en = monoid_orbit_enumerate(reflection_solution(5), 8, 1000);
  CHECK_FALSE(en.complete);
  CHECK(en.cutoff == 5);
  CHECK(en.counts.size() == 5);
  CHECK_THROWS_AS(orbit_equal(transposition_solution(5), {0, 1, 2, 3, 4, 5, 6, 7}, {9, 9, 9, 9, 9, 9, 9, 9}, 10),
                  BudgetExceeded);
}

TEST_CASE("pairwise orbit search agrees with the enumeration", "[oracle]") {
  const auto q = reflection_solution(5);
  const auto en = monoid_orbit_enumerate(q, 4);
  const std::vector<std::vector<Letter>> words{{0, 1, 2, 3}, {1, 1, 1, 1}, {4, 2, 0, 3}, {2, 2, 4, 1}, {3, 0, 1, 1}};
  for (const auto& a : words)
    for (const auto& b : words) CHECK(orbit_equal(q, a, b) == (en.orbit_of(a) == en.orbit_of(b)));
  CHECK_FALSE(orbit_equal(q, {0, 1}, {0, 1, 2}));
}

TEST_CASE("windowed orbit search over Z", "[oracle]") {
  const auto w = ReflectionWord::infinite({1, -1, 1});
  const auto res = infinite_reflection_orbit_equal(w, normal_form(w).word);
  CHECK(res.equal);
  const auto miss = infinite_reflection_orbit_equal(w, ReflectionWord::infinite({1, 1, 1}));
  CHECK_FALSE(miss.equal);
  CHECK(miss.stabilized);
  CHECK(miss.margin == 16);
  CHECK_THROWS(infinite_reflection_orbit_equal(ReflectionWord::finite({0}, 3), w));
}

TEST_CASE("Cayley balls of structure groups", "[oracle]") {
  const auto s3 = make_symmetric_group(3);
  std::vector<Element> ts;
  for (Element x = 0; x < s3.order(); ++x)
    if (symmetric_element(3, x).transposition_length() == 1) ts.push_back(x);
  const auto gens = conjugation_embedding(s3, ts);
  REQUIRE(gens.size() == 3);
  CHECK(gens.front().lattice == std::vector<std::int64_t>{1});
  const auto ball = group_ball_enumerate(s3, gens, 7);
  CHECK(ball.sphere_sizes == std::vector<std::uint64_t>{1, 6, 8, 6, 6, 6, 6, 6});

  // spheres of a finite-by-Z group end at |G|
  const auto d7 = make_dihedral_group(7);
  std::vector<Element> refl;
  for (Element j = 7; j < 14; ++j) refl.push_back(j);
  const auto b7 = group_ball_enumerate(d7, conjugation_embedding(d7, refl), 8);
  CHECK(b7.sphere_sizes.back() == d7.order());
  std::uint64_t total = 0;
  for (const auto s : b7.sphere_sizes) {
    CHECK(total + s >= total);
    total += s;
  }

  CHECK_THROWS_AS(group_ball_enumerate(s3, conjugation_embedding(s3, ts), 100, 1000), BudgetExceeded);
  CHECK_THROWS(conjugation_embedding(s3, {ts[0], ts[1]}));
}
