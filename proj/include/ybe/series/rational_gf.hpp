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
#include <ybe/series/truncated_series.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ybe {

/// A rational generating function num(t)/den(t) with den(0) != 0.
///
/// No gcd normalization is performed; two functions compare equal when
/// their cross products agree.
class RationalGF {
 public:
  RationalGF() : num_(), den_(Polynomial::constant(1)) {}

  // NOLINTNEXTLINE(google-explicit-constructor): polynomials are generating functions
  RationalGF(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(1)) {}

  RationalGF(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    // strip a common power of t so that e.g. t^2/(t(1-t)) stays expandable
    if (den_[0] == 0 && !num_.is_zero()) {
      const std::size_t k = std::min(num_.valuation(), den_.valuation());
      num_ = num_.divided_by_t_power(k);
      den_ = den_.divided_by_t_power(k);
    } else if (den_[0] == 0) {
      den_ = den_.divided_by_t_power(den_.valuation());
    }
    if (den_[0] == 0) throw std::domain_error("not expandable at origin");
  }

  [[nodiscard]] const Polynomial& numerator() const { return num_; }
  [[nodiscard]] const Polynomial& denominator() const { return den_; }

  [[nodiscard]] bool is_polynomial() const { return den_.degree() == 0; }

  /// Common factors cancelled, denominator scaled to constant term 1. Only
  /// used for presentation; equality never depends on it.
  [[nodiscard]] RationalGF reduced() const {
    const Polynomial g = gcd(num_, den_);
    Polynomial n = num_.is_zero() ? num_ : divmod(num_, g).first;
    Polynomial d = num_.is_zero() ? Polynomial::constant(1) : divmod(den_, g).first;
    const Rational c = d[0];
    return {n * (1 / c), d * (1 / c)};
  }

  /// Unique series s with den * s == num mod t^{order+1}.
  [[nodiscard]] TruncatedSeries expand(std::size_t order) const {
    TruncatedSeries s(order);
    const Rational inv0 = 1 / den_[0];
    for (std::size_t n = 0; n <= order; ++n) {
      Rational acc = num_[n];
      const std::size_t top = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(den_.degree(), 0)));
      for (std::size_t k = 1; k <= top; ++k) acc -= den_[k] * s[n - k];
      s[n] = acc * inv0;
    }
    return s;
  }

  /// Quotient rule.
  [[nodiscard]] RationalGF derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
  }

  friend RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalGF operator-(const RationalGF& a) { return {-a.num_, a.den_}; }
  friend RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalGF operator*(const Rational& s, const RationalGF& a) { return {a.num_ * s, a.den_}; }
  friend RationalGF operator*(const RationalGF& a, const Rational& s) { return {a.num_ * s, a.den_}; }
  friend RationalGF operator/(const RationalGF& a, const RationalGF& b) {
    if (b.num_.is_zero()) throw std::domain_error("division by the zero generating function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalGF& operator+=(const RationalGF& o) { return *this = *this + o; }
  RationalGF& operator-=(const RationalGF& o) { return *this = *this - o; }
  RationalGF& operator*=(const RationalGF& o) { return *this = *this * o; }

  friend bool operator==(const RationalGF& a, const RationalGF& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  [[nodiscard]] std::string to_string() const {
    if (is_polynomial()) return (num_ * (1 / den_[0])).to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

inline TruncatedSeries expand_rational(const RationalGF& gf, std::size_t order) { return gf.expand(order); }

inline RationalGF pow(const RationalGF& base, unsigned exponent) {
  return {pow(base.numerator(), exponent), pow(base.denominator(), exponent)};
}

/// (1+t)/(1-t): growth series of Z with its standard generator.
inline RationalGF integers_growth() { return {Polynomial{1, 1}, Polynomial{1, -1}}; }

}  // namespace ybe
