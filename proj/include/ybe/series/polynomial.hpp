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

#include <ybe/series/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybe {

/// Dense univariate polynomial in t with exact rational coefficients.
/// Index i of the coefficient vector holds the coefficient of t^i; trailing
/// zeros are always stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;

  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  template <typename Int>
    requires std::is_integral_v<Int>
  static Polynomial from_integers(const std::vector<Int>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
  }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }

  /// c * t^k
  static Polynomial monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> coeffs(k + 1);
    coeffs[k] = c;
    return Polynomial(std::move(coeffs));
  }

  /// Degree, or -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^k (zero beyond the degree).
  [[nodiscard]] Rational operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }

  /// Exponent of the lowest non-zero term; 0 for the zero polynomial.
  [[nodiscard]] std::size_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return i;
    }
    return 0;
  }

  [[nodiscard]] Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  /// Multiplication by t^k.
  [[nodiscard]] Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rational> c(k);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(c));
  }

  /// Exact division by t^k; throws when a low coefficient is non-zero.
  [[nodiscard]] Polynomial divided_by_t_power(std::size_t k) const {
    for (std::size_t i = 0; i < std::min(k, coeffs_.size()); ++i) {
      if (coeffs_[i] != 0) throw std::domain_error("polynomial not divisible by t^" + std::to_string(k));
    }
    if (k >= coeffs_.size()) return {};
    return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }

  [[nodiscard]] Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(-t)
  [[nodiscard]] Polynomial reflected() const {
    std::vector<Rational> c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const bool unit = mag == 1;
      if (i == 0 || !unit) out += mag.str();
      if (i >= 1) out += (i == 0 || unit) ? "t" : "*t";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

/// Quotient and remainder of a / b over Q.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> q(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
  Polynomial r = a;
  const Rational lead = b[static_cast<std::size_t>(b.degree())];
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    const Rational c = r[static_cast<std::size_t>(r.degree())] / lead;
    q[shift] = c;
    r -= b.shifted(shift) * c;
  }
  return {Polynomial(std::move(q)), r};
}

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (1 / a[static_cast<std::size_t>(a.degree())]);
}

/// 1 + c*t^k, used all over the place for the growth products.
inline Polynomial one_plus(const Rational& c, std::size_t k = 1) {
  return Polynomial::constant(1) + Polynomial::monomial(c, k);
}

}  // namespace ybe
