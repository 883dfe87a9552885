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


#include <ybe/growth/class2.hpp>
#include <ybe/growth/defect.hpp>
#include <ybe/oracle/ball.hpp>
#include <ybe/series/json.hpp>

#include <catch_amalgamated.hpp>

using namespace ybe;

namespace {

std::string coeffs(const TruncatedSeries& s) {
  std::string out;
  for (const auto& c : s.coefficients()) out += (out.empty() ? "" : ",") + to_string(c);
  return out;
}

std::string spheres(const BallEnumeration& b) {
  std::string out;
  for (const auto v : b.sphere_sizes) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

std::vector<Element> everything(const FiniteGroupTable& g) {
  std::vector<Element> v(g.order());
  for (Element x = 0; x < g.order(); ++x) v[x] = x;
  return v;
}

RationalGF over_one_minus_t(Polynomial num) { return {std::move(num), Polynomial{1, -1}}; }

}  // namespace

TEST_CASE("structure group of transpositions", "[group]") {
  CHECK(coeffs(as_transpositions_group_gf(3).expand(5)) == "1,6,8,6,6,6");
  CHECK(coeffs(as_transpositions_group_gf(4).expand(6)) == "1,12,35,36,24,24,24");
  CHECK(solomon_series(4) == Polynomial{1, 6, 11, 6});
}

TEST_CASE("structure group of reflections", "[group]") {
  // 1 + 4t^2 + 10t/(1 - t) for odd d = 5
  CHECK(as_reflections_group_gf(5) == RationalGF(Polynomial{1, 0, 4}) + over_one_minus_t(Polynomial{0, 10}));
  CHECK(coeffs(as_reflections_group_gf(6).expand(5)) == "1,12,26,36,48,60");
  const auto g = make_dihedral_group(6);
  std::vector<Element> refl;
  for (Element j = 6; j < 12; ++j) refl.push_back(j);
  CHECK(spheres(group_ball_enumerate(g, conjugation_embedding(g, refl), 5)) == "1,12,26,36,48,60");
}

TEST_CASE("defect series of small groups", "[group]") {
  const auto s3 = defect_series(make_symmetric_group(3), 6);
  CHECK(s3.classification == SupportClass::finite);
  CHECK(*s3.closed_form == RationalGF(Polynomial{2, 2}));

  const auto d5 = defect_series(make_dihedral_group(5), 6);
  CHECK(d5.classification == SupportClass::finite);
  CHECK(d5.polynomial_part == Polynomial{4, 12, 12, 4});

  const auto s4 = defect_series(make_symmetric_group(4), 8);
  CHECK(s4.classification == SupportClass::finite_plus_axis_rays);
  CHECK(coeffs(s4.truncated) == "11,50,36,32,32,32,32,32,32");
  // 11 + 50t + 4t^2 + 32t^2/(1 - t)
  CHECK(*s4.closed_form == RationalGF(Polynomial{11, 50, 4}) + over_one_minus_t(Polynomial{0, 0, 32}));
  REQUIRE(s4.tails.size() == 1);
  CHECK(s4.tails.front().period == 1);

  const auto d9 = defect_series(make_dihedral_group(9), 8);
  CHECK(d9.classification == SupportClass::finite_plus_axis_rays);
  CHECK(coeffs(d9.truncated) == "8,56,168,254,192,114,72,54,48");
  CHECK(coeffs(defect_series(make_dihedral_group(9), 12).truncated).ends_with("48,48,48,48"));
  // the defect stays 6 along the ray of the class of r^3
  REQUIRE(d9.tails.size() == 1);
  const DefectContext ctx9(make_dihedral_group(9));
  const std::size_t ray = d9.tails.front().cls;
  CHECK(make_dihedral_group(9).label(ctx9.decomposition().representative(ray)) == "r^3");
  for (std::int64_t k = 2; k <= 12; ++k) {
    std::vector<std::int64_t> kbar(ctx9.rank(), 0);
    kbar[ray - 1] = k;
    CHECK(ctx9.measure(kbar).defect == 6);
  }

  const auto d6 = defect_series(make_dihedral_group(6), 6);
  CHECK(*d6.closed_form == over_one_minus_t(Polynomial{2, 6, 4}));
}

TEST_CASE("full conjugation growth agrees with the Cayley ball", "[group]") {
  for (const auto& g : {make_symmetric_group(3), make_dihedral_group(5), make_dihedral_group(6)}) {
    const auto f = as_full_conjugation_gf(g, 4);
    REQUIRE(f.closed_form);
    CHECK(f.closed_form->expand(4) == f.truncated);
    CHECK(coeffs(f.truncated) == spheres(group_ball_enumerate(g, conjugation_embedding(g, everything(g)), 4)));
  }
  CHECK(coeffs(as_full_conjugation_gf(make_symmetric_group(3), 5).truncated) == "1,12,48,112,198,306");
  CHECK(coeffs(as_full_conjugation_gf(make_symmetric_group(4), 4).truncated) == "1,48,453,1886,5268");
}

TEST_CASE("defect records", "[group]") {
  const DefectContext ctx(make_dihedral_group(5));
  CHECK(ctx.gamma() == 5);
  CHECK(ctx.rank() == 3);
  // one rotation class times the other covers every non-identity rotation
  const auto rec = ctx.measure({1, 1, 0});
  CHECK(rec.product_size == 4);
  CHECK(rec.defect == 1);
  CHECK(ctx.measure({0, 0, 1}).defect == 0);
  CHECK_THROWS(ctx.measure({1, 1}));
}
