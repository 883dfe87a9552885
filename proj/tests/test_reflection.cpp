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
#include <ybe/reflection/frs.hpp>
#include <ybe/reflection/invariants.hpp>
#include <ybe/reflection/lemmas.hpp>
#include <ybe/reflection/normal_form.hpp>

#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

using namespace ybe;

namespace {

std::string coeffs(const TruncatedSeries& s) {
  std::string out;
  for (const auto& c : s.coefficients()) out += (out.empty() ? "" : ",") + to_string(c);
  return out;
}

ReflectionWord z(std::vector<std::int64_t> letters) { return ReflectionWord::infinite(std::move(letters)); }

}  // namespace

TEST_CASE("invariants of words over Z", "[reflection]") {
  const auto t = invariants(z({-6, -2, -2}));
  CHECK(t.weight == -6);
  CHECK(t.density == 4);
  CHECK(t.anchor == 2);
  CHECK(t.ess_even == 1);
  CHECK(t.ess_odd == 2);
  CHECK(t.length == 3);
  // a frozen word keeps its own parities
  const auto frozen = invariants(z({3, 3, 3}));
  CHECK(frozen.density == 0);
  CHECK(frozen.anchor == 3);
  CHECK(frozen.ess_odd == 3);
  CHECK_THROWS_AS(essentialise(z({3, 3})), std::domain_error);
  CHECK(push_through(z({0, 1}), 5) == 3);
  CHECK(to_string(z({5, 5, 3})) == "e_5^2 e_3");
  CHECK(to_string(z({})) == "1");
}

TEST_CASE("invariants of words over Z_d", "[reflection]") {
  const auto w = ReflectionWord::finite({0, 2, 4, 2}, 6);
  const auto t = invariants(w);
  CHECK(t.weight == 0);
  CHECK(t.density == 2);
  CHECK(t.anchor == 0);
  // level 3 is odd, so the whole length is booked as even
  CHECK(t.ess_even == 4);
  CHECK(t.ess_odd == 0);
  CHECK(essentialise(w) == ReflectionWord::finite({0, 1, 2, 1}, 3));
  CHECK_THROWS(ReflectionWord::finite({5}, 5));
}

TEST_CASE("normal forms over Z", "[reflection]") {
  const auto nf = normal_form(z({1, -1, 1}));
  CHECK(nf.shape == NormalShape::Length3);
  CHECK(to_string(nf.word) == "e_5^2 e_3");
  CHECK(invariants(nf.word) == invariants(z({1, -1, 1})));

  const auto two = normal_form(z({4, 10}));
  CHECK(two.shape == NormalShape::Length2);
  CHECK(invariants(two.word) == invariants(z({4, 10})));

  const auto frozen = normal_form(z({7, 7}));
  CHECK(frozen.shape == NormalShape::FrozenPower);
  CHECK(frozen.word == z({7, 7}));

  const auto w = z({3, 0, 5, 2, 2, 9});
  const auto st = normal_form(w);
  CHECK(st.shape == NormalShape::Standard);
  CHECK(invariants(st.word) == invariants(w));
  CHECK(normal_form(st.word).word == st.word);
}

TEST_CASE("invariants separate the orbits of R_4 and R_6", "[reflection]") {
  for (const int d : {4, 6}) {
    const auto en = monoid_orbit_enumerate(reflection_solution(d), 5);
    for (std::size_t n = 0; n <= 5; ++n) {
      std::map<std::uint32_t, InvariantTuple> by_orbit;
      std::set<InvariantTuple> distinct;
      for (std::uint64_t code = 0; code < en.orbit_index[n].size(); ++code) {
        const auto letters = en.decode(code, n);
        const auto w = ReflectionWord::finite({letters.begin(), letters.end()}, d);
        const auto t = invariants(w);
        const auto [it, fresh] = by_orbit.emplace(en.orbit_index[n][code], t);
        if (!fresh) CHECK(it->second == t);
        distinct.insert(t);
        const auto nf = normal_form(w).word;
        std::vector<Letter> nl(nf.letters.begin(), nf.letters.end());
        CHECK(en.orbit_of(nl) == en.orbit_index[n][code]);
      }
      CHECK(distinct.size() == en.counts[n]);
    }
  }
}

TEST_CASE("monoid growth of reflections", "[reflection]") {
  CHECK(coeffs(monoid_growth_reflections(5).expand(4)) == "1,5,9,10,10");
  CHECK(monoid_growth_reflections(1) == RationalGF(Polynomial{1}, Polynomial{1, -1}));
  CHECK(monoid_growth_reflections(2) == RationalGF(Polynomial{1}, Polynomial{1, -2, 1}));
  for (std::int64_t d = 1; d <= 30; ++d) CHECK(monoid_growth_reflections(d) == monoid_growth_reflections_by_levels(d));
  for (const int d : {3, 4, 6, 8}) {
    const auto en = monoid_orbit_enumerate(reflection_solution(d), 5);
    const auto s = monoid_growth_reflections(d).expand(5);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(Rational(en.counts[n]) == s[n]);
  }
}

TEST_CASE("image of the full reflection semigroup", "[reflection]") {
  const auto img = frs_embed(ReflectionWord::finite({0, 1, 3}, 5));
  CHECK(img == FRSImage{2, 3, 0});
  CHECK(frs_image_contains(5, img));
  CHECK_FALSE(frs_image_contains(5, FRSImage{0, 2, 0}));
  CHECK(frs_image_contains(6, FRSImage{1, 1, 1}));
  CHECK_FALSE(frs_image_contains(6, FRSImage{2, 1, 1}));
  CHECK_FALSE(frs_image_contains(6, FRSImage{0, 2, 1}));
  CHECK_THROWS(frs_embed(ReflectionWord::finite({0, 2}, 4)));
  CHECK(coeffs(frs_growth_gf(5).expand(5)) == "0,0,4,5,5,5");
}

TEST_CASE("gcd lemmas", "[reflection]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> pick(-500, 500);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b) continue;
    const auto n = triple_gcd_witness(a, b, c);
    CHECK(n >= 1);
    CHECK(nt::gcd(a + n * c, b + n * c) == nt::gcd(nt::gcd(a, b), c));
    if (nt::mod(a - b, 2) == 1) CHECK(nt::mod(triple_gcd_witness(a, b, c, 1), 2) == 1);
  }
  std::uniform_int_distribution<std::int64_t> mod(1, 60);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t d = mod(rng);
    std::vector<std::int64_t> v{nt::mod(pick(rng), d), nt::mod(pick(rng), d), nt::mod(pick(rng), d)};
    std::int64_t target = d;
    for (const auto x : v) target = nt::gcd(target, x);
    const auto m = lift_to_coprime(v, d);
    std::int64_t g = 0;
    for (std::size_t k = 0; k < v.size(); ++k) g = nt::gcd(g, v[k] + m[k] * d);
    CHECK(g == target);
  }
  CHECK_THROWS(lift_to_coprime({1, 2}, 4, true));
  const auto odd = lift_to_coprime({0, 2}, 5, true);
  CHECK(nt::mod(0 + odd[0] * 5, 2) == 1);
  CHECK(nt::mod(2 + odd[1] * 5, 2) == 1);
}
