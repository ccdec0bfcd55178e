// Copyright 2026 The mubhadamard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HADAMARD_MODULAR_HPP
#define HADAMARD_MODULAR_HPP

// Arithmetic in F_P for word-sized primes P = 1 (mod r), used to evaluate
// matrices over Z[w_r] at a primitive r-th root of unity mod P. The rank of
// the image is a lower bound for the rank over the cyclotomic field.

#include <cstdint>
#include <utility>
#include <vector>

#include "hadamard/errors.hpp"

namespace hadamard::modular {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) {
      out.push_back(k);
      while (n % k == 0) n /= k;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline constexpr std::uint64_t kPrimeCeiling = std::uint64_t{1} << 31;

/// The `index`-th largest prime P < 2^31 with P = 1 (mod r).
inline std::uint64_t prime_for_order(std::uint64_t r, int index = 0) {
  if (r == 0 || r >= kPrimeCeiling / 4) throw InvalidArgumentError("root order out of range for modular rank");
  std::uint64_t k = (kPrimeCeiling - 2) / r;
  for (; k > 0; --k) {
    const std::uint64_t p = k * r + 1;
    if (is_prime_u64(p) && index-- == 0) return p;
  }
  throw InvalidArgumentError("no suitable prime");
}

/// Smallest-base element of exact multiplicative order r in F_P.
inline std::uint64_t element_of_order(std::uint64_t r, std::uint64_t p) {
  if ((p - 1) % r != 0) throw InvalidArgumentError("r does not divide P - 1");
  const auto factors = prime_factors(r);
  for (std::uint64_t x = 2; x < p; ++x) {
    const std::uint64_t g = pow_mod(x, (p - 1) / r, p);
    bool primitive = true;
    for (std::uint64_t l : factors) {
      if (pow_mod(g, r / l, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw InvalidArgumentError("no element of the requested order");
}

/// Dense row-major matrix over F_P.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t p = 2;
  std::vector<std::uint32_t> a;

  Matrix(std::size_t m, std::size_t n, std::uint64_t prime) : rows(m), cols(n), p(prime), a(m * n, 0) {}
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

/// Rank by forward elimination. Pivots are the first nonzero entry in the
/// column scanning rows in order, so the pivot sequence is deterministic.
/// Stops once every column has a pivot.
inline std::size_t rank(Matrix m) {
  const std::uint64_t p = m.p;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    }
    const std::uint64_t inv = inverse(m(r, c), p);
    std::uint32_t* pivot_row = &m.a[r * m.cols];
    for (std::size_t j = c; j < m.cols; ++j) pivot_row[j] = static_cast<std::uint32_t>(mul_mod(pivot_row[j], inv, p));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      std::uint32_t* row = &m.a[i * m.cols];
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t j = c; j < m.cols; ++j) {
        if (pivot_row[j] != 0) row[j] = static_cast<std::uint32_t>((row[j] + neg * pivot_row[j]) % p);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace hadamard::modular

#endif  // HADAMARD_MODULAR_HPP
