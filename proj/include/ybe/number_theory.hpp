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

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ybe::nt {

/// Non-negative gcd; gcd(0, 0) = 0.
inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

/// Least non-negative residue of a modulo m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Distinct prime divisors of |n|, ascending. Trial division.
inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> primes;
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      primes.push_back(static_cast<std::int64_t>(p));
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) primes.push_back(static_cast<std::int64_t>(m));
  return primes;
}

/// Positive divisors of n > 0, ascending.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t c = 1; c * c <= n; ++c) {
    if (n % c == 0) {
      small.push_back(c);
      if (c != n / c) large.push_back(n / c);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::int64_t euler_phi(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::int64_t result = n;
  for (const auto p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

/// Number of divisors of num/den; zero when the ratio is not a positive integer.
inline std::int64_t tau(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::invalid_argument("tau: zero denominator");
  if (num % den != 0) return 0;
  const std::int64_t n = num / den;
  if (n <= 0) return 0;
  return static_cast<std::int64_t>(divisors(n).size());
}

/// Solves x = r_i (mod m_i) for pairwise coprime moduli. Returns the least
/// non-negative solution modulo prod(m_i), or nullopt on overflow.
inline std::optional<std::int64_t> crt(const std::vector<std::int64_t>& residues,
                                       const std::vector<std::int64_t>& moduli) {
  __int128 x = 0;
  __int128 m = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const __int128 mi = moduli[i];
    const __int128 ri = mod(residues[i], moduli[i]);
    // find k with x + k*m = ri (mod mi); m is invertible mod mi
    __int128 inv = 0;
    {
      // extended Euclid on (m mod mi, mi)
      __int128 a = m % mi, b = mi, u = 1, v = 0;
      while (b != 0) {
        const __int128 q = a / b;
        __int128 tmp = a - q * b; a = b; b = tmp;
        tmp = u - q * v; u = v; v = tmp;
      }
      if (a != 1 && mi != 1) return std::nullopt;
      inv = ((u % mi) + mi) % mi;
    }
    __int128 k = ((ri - x % mi) % mi + mi) % mi;
    k = (k * inv) % mi;
    x += k * m;
    m *= mi;
    if (m > static_cast<__int128>(INT64_MAX)) return std::nullopt;
  }
  return static_cast<std::int64_t>(x);
}

}  // namespace ybe::nt
