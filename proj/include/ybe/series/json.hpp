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

#include <ybe/series/polynomial.hpp>
#include <ybe/series/rational_gf.hpp>
#include <ybe/series/truncated_series.hpp>

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

namespace ybe {

using Json = nlohmann::ordered_json;

/// Coefficients as decimal strings ("p" or "p/q"), degree ascending.
inline Json coefficients_to_json(std::span<const Rational> coeffs) {
  Json arr = Json::array();
  for (const auto& c : coeffs) arr.push_back(to_string(c));
  return arr;
}

inline Json to_json(const Polynomial& p) { return coefficients_to_json(p.coefficients()); }

inline Json to_json(const TruncatedSeries& s) {
  Json j;
  j["order"] = s.order();
  j["coeffs"] = coefficients_to_json(s.coefficients());
  return j;
}

inline Json to_json(const RationalGF& gf) {
  Json j;
  j["num"] = to_json(gf.numerator());
  j["den"] = to_json(gf.denominator());
  return j;
}

inline Polynomial polynomial_from_json(const Json& arr) {
  std::vector<Rational> c;
  for (const auto& v : arr) {
    c.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long long>()));
  }
  return Polynomial(std::move(c));
}

inline TruncatedSeries series_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& v : j.at("coeffs")) c.push_back(parse_rational(v.get<std::string>()));
  if (c.size() != j.at("order").get<std::size_t>() + 1) throw std::invalid_argument("series order mismatch");
  return TruncatedSeries(std::move(c));
}

inline RationalGF gf_from_json(const Json& j) {
  return {polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den"))};
}

}  // namespace ybe
