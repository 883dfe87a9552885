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
#include <ybe/series/rational.hpp>
#include <ybe/series/truncated_series.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ybe {

/// Truncated series in two variables: coefficient (i, j) belongs to t^i x^j,
/// for 0 <= i <= orderT and 0 <= j <= orderX.
class BivariateSeries {
 public:
  BivariateSeries(std::size_t order_t, std::size_t order_x)
      : order_t_(order_t), order_x_(order_x), c_((order_t + 1) * (order_x + 1)) {}

  static BivariateSeries one(std::size_t order_t, std::size_t order_x) {
    BivariateSeries s(order_t, order_x);
    s.at(0, 0) = 1;
    return s;
  }

  [[nodiscard]] std::size_t order_t() const { return order_t_; }
  [[nodiscard]] std::size_t order_x() const { return order_x_; }

  [[nodiscard]] const Rational& at(std::size_t i, std::size_t j) const { return c_.at(index(i, j)); }
  Rational& at(std::size_t i, std::size_t j) { return c_.at(index(i, j)); }

  /// [x^j] as a truncated series in t.
  [[nodiscard]] TruncatedSeries coefficient_of_x(std::size_t j) const {
    TruncatedSeries s(order_t_);
    for (std::size_t i = 0; i <= order_t_; ++i) s[i] = at(i, j);
    return s;
  }

  void set_coefficient_of_x(std::size_t j, const Polynomial& p) {
    for (std::size_t i = 0; i <= order_t_; ++i) at(i, j) = p[i];
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
  }

  BivariateSeries& operator*=(const Rational& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries r(std::min(a.order_t_, b.order_t_), std::min(a.order_x_, b.order_x_));
    for (std::size_t i = 0; i <= r.order_t_; ++i)
      for (std::size_t j = 0; j <= r.order_x_; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
  }
  friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries r(std::min(a.order_t_, b.order_t_), std::min(a.order_x_, b.order_x_));
    for (std::size_t i = 0; i <= r.order_t_; ++i)
      for (std::size_t j = 0; j <= r.order_x_; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
  }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries r(std::min(a.order_t_, b.order_t_), std::min(a.order_x_, b.order_x_));
    for (std::size_t i1 = 0; i1 <= r.order_t_; ++i1) {
      for (std::size_t j1 = 0; j1 <= r.order_x_; ++j1) {
        const Rational& u = a.at(i1, j1);
        if (u == 0) continue;
        for (std::size_t i2 = 0; i1 + i2 <= r.order_t_; ++i2)
          for (std::size_t j2 = 0; j1 + j2 <= r.order_x_; ++j2) r.at(i1 + i2, j1 + j2) += u * b.at(i2, j2);
      }
    }
    return r;
  }
  friend BivariateSeries operator*(BivariateSeries a, const Rational& s) { return a *= s; }

  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) = default;

 private:
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const {
    if (i > order_t_ || j > order_x_) throw std::out_of_range("bivariate coefficient out of range");
    return i * (order_x_ + 1) + j;
  }

  std::size_t order_t_;
  std::size_t order_x_;
  std::vector<Rational> c_;
};

/// sum_{n>=0} f^n / n!; f must have zero constant term.
inline BivariateSeries bivariate_exp(const BivariateSeries& f) {
  if (f.at(0, 0) != 0) throw std::domain_error("exp undefined");
  BivariateSeries result = BivariateSeries::one(f.order_t(), f.order_x());
  BivariateSeries term = result;
  // f^n has total degree >= n, so terms beyond orderT + orderX vanish
  const std::size_t top = f.order_t() + f.order_x();
  for (std::size_t n = 1; n <= top; ++n) {
    term = term * f * Rational(1, static_cast<long>(n));
    if (term.is_zero()) break;
    result = result + term;
  }
  return result;
}

/// (1 - t x)^{-t} = sum_n binom(-t, n) (-t x)^n, truncated.
inline BivariateSeries bivariate_binomial(std::size_t order_t, std::size_t order_x) {
  BivariateSeries s(order_t, order_x);
  // binom(-t, n) * (-t)^n = prod_{k=0}^{n-1} (t + k) * t^n / n!
  Polynomial rising = Polynomial::constant(1);
  for (std::size_t n = 0; n <= order_x; ++n) {
    if (n > 0) rising *= Polynomial{Rational(static_cast<long>(n - 1)), Rational(1)};
    s.set_coefficient_of_x(n, rising.shifted(n) * (1 / factorial(static_cast<unsigned>(n))));
  }
  return s;
}

}  // namespace ybe
