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


#include <ybe/number_theory.hpp>
#include <ybe/series/bivariate_series.hpp>
#include <ybe/series/json.hpp>
#include <ybe/series/polynomial.hpp>
#include <ybe/series/rational.hpp>
#include <ybe/series/rational_gf.hpp>
#include <ybe/series/truncated_series.hpp>

#include <catch_amalgamated.hpp>

using namespace ybe;

namespace {

std::string coeffs(const TruncatedSeries& s) {
  std::string out;
  for (const auto& c : s.coefficients()) out += (out.empty() ? "" : ",") + to_string(c);
  return out;
}

}  // namespace

TEST_CASE("rationals parse and factorials are exact", "[series]") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(to_string(factorial(25)) == "15511210043330985984000000");
  CHECK(is_integral(Rational(4, 2)));
  CHECK_THROWS(to_integer(Rational(1, 2)));
}

TEST_CASE("polynomial arithmetic", "[series]") {
  const Polynomial a{1, 1};
  const Polynomial b{1, -1};
  CHECK(a * b == Polynomial{1, 0, -1});
  CHECK((a * b).to_string() == "1 - t^2");
  CHECK(pow(a, 3) == Polynomial{1, 3, 3, 1});
  CHECK(Polynomial{}.degree() == -1);
  CHECK(Polynomial{0, 0, 2}.valuation() == 2);
  CHECK(Polynomial{1, 2, 3}.derivative() == Polynomial{2, 6});
  CHECK(Polynomial{1, 2, 3}.evaluate(2) == 17);

  const auto [q, r] = divmod(Polynomial{-1, 0, 0, 1}, Polynomial{-1, 1});
  CHECK(q == Polynomial{1, 1, 1});
  CHECK(r.is_zero());
  // gcd is monic
  CHECK(gcd(Polynomial{2, 0, -2}, Polynomial{3, 3}) == Polynomial{1, 1});
}

TEST_CASE("truncated series multiply and shift", "[series]") {
  const auto s = TruncatedSeries::from_integers(std::vector<int>{1, 1, 1, 1, 1});
  CHECK(coeffs(s * s) == "1,2,3,4,5");
  CHECK(coeffs(s.shifted(2)) == "0,0,1,1,1");
  CHECK(coeffs(s.derivative()) == "1,2,3,4");
  CHECK(s.truncated(2).order() == 2);
}

TEST_CASE("rational generating functions expand and compare", "[series]") {
  const RationalGF geo(Polynomial{1}, Polynomial{1, -1});
  CHECK(coeffs(geo.expand(4)) == "1,1,1,1,1");
  // equality is by cross-multiplication, not by representation
  CHECK(RationalGF(Polynomial{1, 1}, Polynomial{1, 0, -1}) == geo);
  CHECK(RationalGF(Polynomial{1, 1}, Polynomial{1, 0, -1}).reduced().denominator() == Polynomial{1, -1});
  CHECK(coeffs(integers_growth().expand(4)) == "1,2,2,2,2");
  CHECK(coeffs(pow(integers_growth(), 2).expand(4)) == "1,4,8,12,16");
  // a common power of t is stripped
  CHECK(coeffs(RationalGF(Polynomial{0, 0, 1}, Polynomial{0, 1, -1}).expand(3)) == "0,1,1,1");
  CHECK_THROWS_AS(RationalGF(Polynomial{1}, Polynomial{0, 1}), std::domain_error);
  CHECK(coeffs((geo * geo).expand(3)) == "1,2,3,4");
  CHECK(coeffs((geo / geo).expand(2)) == "1,0,0");
}

TEST_CASE("json serializes degree-ascending integer strings", "[series]") {
  const RationalGF gf(Polynomial{1, 5, 2, -2}, Polynomial{1, -1});
  const Json j = to_json(gf);
  CHECK(j.dump() == R"({"num":["1","5","2","-2"],"den":["1","-1"]})");
  CHECK(gf_from_json(j) == gf);
  const auto s = gf.expand(5);
  CHECK(to_json(s).dump() == R"({"order":5,"coeffs":["1","6","8","6","6","6"]})");
  CHECK(series_from_json(to_json(s)) == s);
}

TEST_CASE("bivariate exponential", "[series]") {
  BivariateSeries f(2, 4);
  f.at(0, 1) = 1;
  const auto e = bivariate_exp(f);
  for (std::size_t j = 0; j <= 4; ++j) CHECK(e.at(0, j) == 1 / factorial(static_cast<unsigned>(j)));
  CHECK(e.at(1, 1) == 0);
  // (1 - t x)^{-t}: coefficient of t^2 x is 1
  CHECK(bivariate_binomial(3, 2).at(2, 1) == 1);
}

TEST_CASE("number theory helpers", "[series]") {
  CHECK(nt::gcd(-12, 18) == 6);
  CHECK(nt::mod(-7, 5) == 3);
  CHECK(nt::prime_divisors(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(nt::divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(nt::euler_phi(36) == 12);
  CHECK(nt::tau(12) == 6);
  CHECK(nt::tau(12, 5) == 0);
  CHECK(nt::crt({2, 3, 2}, {3, 5, 7}) == 23);
}
