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
 * @file rational.hpp
 *
 * Exact scalar types shared by every module: arbitrary precision integers
 * and rationals, plus their canonical string form ("p" or "p/q").
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ybe {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an exactness invariant is violated inside the library
/// (e.g. a growth coefficient that should be integral is not).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Integer to_integer(const Rational& r) {
  if (!is_integral(r)) {
    throw InternalError("non-integral coefficient " + r.str());
  }
  return boost::multiprecision::numerator(r);
}

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Integer& i) { return i.str(); }

/// Parses "p" or "p/q" with optional leading minus on p.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer literal");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') {
        throw std::invalid_argument("malformed integer literal: " + std::string(s));
      }
    }
    return Integer(std::string(s));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
  return Rational(parse_int(text.substr(0, slash)), den);
}

inline Rational factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

}  // namespace ybe
