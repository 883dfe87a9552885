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


#include <ybe/oracle/orbit.hpp>
#include <ybe/transposition/monoid.hpp>

#include <catch_amalgamated.hpp>

#include <map>

using namespace ybe;

namespace {

std::string coeffs(const TruncatedSeries& s) {
  std::string out;
  for (const auto& c : s.coefficients()) out += (out.empty() ? "" : ",") + to_string(c);
  return out;
}

}  // namespace

TEST_CASE("monoid growth of transpositions", "[transposition]") {
  CHECK(coeffs(monoid_growth_transpositions(1).expand(3)) == "1,0,0,0");
  CHECK(coeffs(monoid_growth_transpositions(2).expand(3)) == "1,1,1,1");
  CHECK(coeffs(monoid_growth_transpositions(3).expand(4)) == "1,3,5,6,6");
  CHECK(coeffs(monoid_growth_transpositions(4).expand(5)) == "1,6,17,30,38,42");
  CHECK(coeffs(fts_growth_gf(4).expand(5)) == "0,0,0,6,11,12");
  CHECK_THROWS(monoid_growth_transpositions(13));
}

TEST_CASE("orbit counts of T_4 match the formula", "[transposition]") {
  const auto en = monoid_orbit_enumerate(transposition_solution(4), 6);
  const auto s = monoid_growth_transpositions(4).expand(6);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(Rational(en.counts[n]) == s[n]);
}

TEST_CASE("image of the full semigroup", "[transposition]") {
  const auto id = Permutation::identity(3);
  CHECK(fts_image_membership(id, 4, 3));
  CHECK_FALSE(fts_image_membership(id, 2, 3));
  CHECK_FALSE(fts_image_membership(id, 5, 3));
  const auto w = TranspositionWord{make_transposition(0, 1), make_transposition(1, 2)};
  CHECK(is_full(w, 3));
  CHECK_FALSE(is_full(w, 4));
  const auto img = fts_embed(w, 3);
  CHECK(img.length == 2);
  CHECK(img.perm.to_string() == "(1 2 3)");
  CHECK(to_string(fts_normal_form(img.perm, 4, 3)) == "e_(2,3)^2 e_(1,2) e_(2,3)");
}

TEST_CASE("normal forms are constant on orbits and stable", "[transposition]") {
  const int d = 4;
  const auto en = monoid_orbit_enumerate(transposition_solution(d), 5);
  for (std::size_t n = 0; n <= 5; ++n) {
    std::map<std::uint32_t, TranspositionWord> seen;
    const std::uint64_t words = en.orbit_index[n].size();
    for (std::uint64_t code = 0; code < words; ++code) {
      const auto w = from_letters(en.decode(code, n), d);
      const auto nf = transposition_normal_form(w, d);
      REQUIRE(nf.size() == n);
      CHECK(en.orbit_of(to_letters(nf, d)) == en.orbit_index[n][code]);
      const auto [it, fresh] = seen.emplace(en.orbit_index[n][code], nf);
      if (!fresh) CHECK(it->second == nf);
    }
  }
  const TranspositionWord w{make_transposition(2, 3), make_transposition(0, 1), make_transposition(2, 3)};
  CHECK(word_partition(w, 5).to_string() == "{{1,2},{3,4},{5}}");
  CHECK(to_string(transposition_normal_form(w, 5)) == "e_(1,2) e_(3,4)^2");
}

TEST_CASE("exponential generating function", "[transposition]") {
  const auto egf = egf_transposition_monoids(6, 5);
  for (int d = 0; d <= 5; ++d) {
    const auto s = monoid_growth_transpositions(d).expand(6);
    for (std::size_t n = 0; n <= 6; ++n)
      CHECK(egf.at(n, static_cast<std::size_t>(d)) * factorial(static_cast<unsigned>(d)) == s[n]);
  }
}
