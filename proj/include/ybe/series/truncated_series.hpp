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

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ybe {

/// Power series c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}).
///
/// The order N is part of the value: binary operations truncate to the
/// smaller order of their operands and never invent coefficients beyond it.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("truncated series needs at least one coefficient");
  }

  template <typename Int>
    requires std::is_integral_v<Int>
  static TruncatedSeries from_integers(const std::vector<Int>& values) {
    std::vector<Rational> c;
    for (const auto v : values) c.emplace_back(v);
    return TruncatedSeries(std::move(c));
  }

  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t i = 0; i <= order; ++i) s.coeffs_[i] = p[i];
    return s;
  }

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  Rational& operator[](std::size_t n) { return coeffs_.at(n); }
  [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }

  [[nodiscard]] TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
  }

  /// Coefficients as exact integers; a fractional coefficient is an internal error.
  [[nodiscard]] std::vector<Integer> integer_coefficients() const {
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(to_integer(c));
    return out;
  }

  /// Term-by-term derivative: order drops by one.
  [[nodiscard]] TruncatedSeries derivative() const {
    if (order() == 0) throw std::domain_error("derivative undefined at this truncation");
    std::vector<Rational> d(order());
    for (std::size_t n = 0; n < d.size(); ++n) d[n] = coeffs_[n + 1] * static_cast<long>(n + 1);
    return TruncatedSeries(std::move(d));
  }

  /// t^k * s, keeping the same order.
  [[nodiscard]] TruncatedSeries shifted(std::size_t k) const {
    TruncatedSeries s(order());
    for (std::size_t n = k; n <= order(); ++n) s.coeffs_[n] = coeffs_[n - k];
    return s;
  }

  TruncatedSeries& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Free-function spelling of TruncatedSeries::derivative.
inline TruncatedSeries series_derivative(const TruncatedSeries& s) { return s.derivative(); }

}  // namespace ybe
