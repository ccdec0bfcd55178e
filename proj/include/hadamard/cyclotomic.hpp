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

#ifndef HADAMARD_CYCLOTOMIC_HPP
#define HADAMARD_CYCLOTOMIC_HPP

// Exact arithmetic with roots of unity.
//
// A CyclotomicInteger of order r is kept as an unreduced coefficient vector
// c[0..r) meaning sum_k c[k] * w^k with w = exp(2 pi i / r). Products are
// plain cyclic convolutions; only the zero test reduces modulo the
// cyclotomic polynomial Phi_r, where exactness actually matters.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hadamard/errors.hpp"

namespace hadamard {

using BigInt = boost::multiprecision::cpp_int;

/// Non-negative remainder of a modulo m (m > 0).
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// The root of unity exp(2 pi i k / r), 0 <= k < r.
struct RootExponent {
  std::int64_t k = 0;
  std::int64_t r = 1;

  constexpr RootExponent() = default;
  RootExponent(std::int64_t exponent, std::int64_t order) : r(order) {
    if (order < 1) {
      throw InvalidArgumentError("root order must be positive");
    }
    k = floor_mod(exponent, order);
  }

  std::complex<double> value() const {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) /
                     static_cast<double>(r);
    return {std::cos(t), std::sin(t)};
  }

  friend bool operator==(const RootExponent&, const RootExponent&) = default;
};

inline RootExponent root_mul(const RootExponent& a, const RootExponent& b) {
  if (a.r != b.r) {
    throw OrderMismatchError("root orders differ: " + std::to_string(a.r) +
                             " vs " + std::to_string(b.r));
  }
  return {a.k + b.k, a.r};
}

inline RootExponent root_inverse(const RootExponent& a) { return {-a.k, a.r}; }

/// Re-expresses a as an r_new-th root of unity; r_new must be a multiple of a.r.
inline RootExponent rescale(const RootExponent& a, std::int64_t r_new) {
  if (r_new < 1 || r_new % a.r != 0) {
    throw InvalidRescaleError("cannot rescale order " + std::to_string(a.r) +
                              " to " + std::to_string(r_new));
  }
  return {a.k * (r_new / a.r), r_new};
}

/// Integer polynomial, lowest degree first, no trailing zero coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  const BigInt& leading() const { return coeffs_.back(); }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return IntPolynomial(std::move(out));
  }

  /// Quotient and remainder by a monic divisor.
  friend std::pair<IntPolynomial, IntPolynomial> divmod_monic(
      const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero() || den.leading() != 1) {
      throw InvalidArgumentError("divisor must be monic");
    }
    if (num.degree() < den.degree()) return {IntPolynomial{}, num};
    std::vector<BigInt> rem = num.coeffs_;
    const auto dd = static_cast<std::size_t>(den.degree());
    std::vector<BigInt> quot(rem.size() - dd);
    for (std::size_t k = rem.size(); k-- > dd;) {
      const BigInt c = rem[k];
      if (c == 0) continue;
      quot[k - dd] = c;
      for (std::size_t t = 0; t <= dd; ++t) rem[k - dd + t] -= c * den.coeffs_[t];
    }
    rem.resize(dd);
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigInt> coeffs_;
};

namespace detail {

struct CyclotomicCacheEntry {
  IntPolynomial phi;
  // Same coefficients as machine integers when they fit (always, for the
  // orders this library meets); drives the fast zero test.
  std::optional<std::vector<std::int64_t>> phi_small;
};

inline std::vector<std::int64_t> divisors(std::int64_t r) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = 1; m * m <= r; ++m) {
    if (r % m != 0) continue;
    out.push_back(m);
    if (m != r / m) out.push_back(r / m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const CyclotomicCacheEntry& cyclotomic_entry(std::int64_t r);

inline CyclotomicCacheEntry compute_cyclotomic(std::int64_t r) {
  std::vector<BigInt> xr(static_cast<std::size_t>(r) + 1);
  xr[0] = -1;
  xr[static_cast<std::size_t>(r)] = 1;
  IntPolynomial poly(std::move(xr));
  for (std::int64_t m : divisors(r)) {
    if (m == r) continue;
    auto [q, rem] = divmod_monic(poly, cyclotomic_entry(m).phi);
    if (!rem.is_zero()) throw ConstructionBug("inexact cyclotomic division");
    poly = std::move(q);
  }
  CyclotomicCacheEntry entry{poly, std::nullopt};
  std::vector<std::int64_t> small;
  bool fits = true;
  for (const BigInt& c : poly.coeffs()) {
    if (boost::multiprecision::abs(c) > BigInt(1) << 40) {
      fits = false;
      break;
    }
    small.push_back(static_cast<std::int64_t>(c));
  }
  if (fits) entry.phi_small = std::move(small);
  return entry;
}

inline const CyclotomicCacheEntry& cyclotomic_entry(std::int64_t r) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::unique_ptr<CyclotomicCacheEntry>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(r); it != cache.end()) return *it->second;
  }
  auto entry = std::make_unique<CyclotomicCacheEntry>(compute_cyclotomic(r));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(r, std::move(entry));
  return *it->second;
}

// Long division by monic phi; returns nullopt if an int64 step overflows.
inline std::optional<bool> remainder_is_zero_i64(std::vector<std::int64_t> poly,
                                                 std::span<const std::int64_t> phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    const std::int64_t c = poly[k];
    if (c == 0) continue;
    for (std::size_t t = 0; t <= deg; ++t) {
      if (phi[t] == 0) continue;
      std::int64_t prod = 0;
      std::int64_t next = 0;
      if (__builtin_mul_overflow(c, phi[t], &prod) ||
          __builtin_sub_overflow(poly[k - deg + t], prod, &next)) {
        return std::nullopt;
      }
      poly[k - deg + t] = next;
    }
  }
  const std::size_t n = std::min(deg, poly.size());
  return std::all_of(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(n),
                     [](std::int64_t c) { return c == 0; });
}

inline bool remainder_is_zero(std::vector<BigInt> poly, const IntPolynomial& phi) {
  const auto& p = phi.coeffs();
  const std::size_t deg = p.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (poly[k] == 0) continue;
    const BigInt c = poly[k];
    for (std::size_t t = 0; t <= deg; ++t) {
      if (p[t] != 0) poly[k - deg + t] -= c * p[t];
    }
  }
  const std::size_t n = std::min(deg, poly.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (poly[k] != 0) return false;
  }
  return true;
}

}  // namespace detail

/// Phi_r, the minimal polynomial of a primitive r-th root of unity.
inline const IntPolynomial& cyclotomic_polynomial(std::int64_t r) {
  if (r < 1) throw InvalidArgumentError("cyclotomic order must be positive");
  return detail::cyclotomic_entry(r).phi;
}

/// Exact zero test for sum_k counts[k] w_r^k with machine-integer
/// coefficients (length r). Falls back to big integers on overflow.
inline bool is_zero_counts(std::span<const std::int64_t> counts) {
  const auto r = static_cast<std::int64_t>(counts.size());
  const auto& entry = detail::cyclotomic_entry(r);
  if (entry.phi_small) {
    std::vector<std::int64_t> poly(counts.begin(), counts.end());
    if (auto res = detail::remainder_is_zero_i64(std::move(poly), *entry.phi_small)) {
      return *res;
    }
  }
  std::vector<BigInt> big(counts.begin(), counts.end());
  return detail::remainder_is_zero(std::move(big), entry.phi);
}

/// Integer combination of powers of w_r, stored unreduced with length r.
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(std::int64_t r = 1)
      : r_(r), c_(static_cast<std::size_t>(check_order(r))) {}

  CyclotomicInteger(std::int64_t r, std::vector<BigInt> coeffs) : r_(check_order(r)) {
    if (static_cast<std::int64_t>(coeffs.size()) != r) {
      throw InvalidArgumentError("coefficient vector length must equal the order");
    }
    c_ = std::move(coeffs);
  }

  static CyclotomicInteger monomial(const RootExponent& w, const BigInt& scale = 1) {
    CyclotomicInteger z(w.r);
    z.c_[static_cast<std::size_t>(w.k)] = scale;
    return z;
  }

  static CyclotomicInteger constant(std::int64_t r, const BigInt& value) {
    return monomial(RootExponent(0, r), value);
  }

  static CyclotomicInteger from_counts(std::span<const std::int64_t> counts) {
    CyclotomicInteger z(static_cast<std::int64_t>(counts.size()));
    for (std::size_t k = 0; k < counts.size(); ++k) z.c_[k] = counts[k];
    return z;
  }

  std::int64_t order() const { return r_; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& operator[](std::size_t k) const { return c_[k]; }

  /// Same value written over r_new-th roots (r_new a multiple of the order).
  CyclotomicInteger rescaled(std::int64_t r_new) const {
    if (r_new < 1 || r_new % r_ != 0) {
      throw InvalidRescaleError("cannot rescale order " + std::to_string(r_) +
                                " to " + std::to_string(r_new));
    }
    if (r_new == r_) return *this;
    const std::int64_t step = r_new / r_;
    CyclotomicInteger z(r_new);
    for (std::size_t k = 0; k < c_.size(); ++k) {
      z.c_[k * static_cast<std::size_t>(step)] = c_[k];
    }
    return z;
  }

  bool is_zero() const {
    const auto& entry = detail::cyclotomic_entry(r_);
    if (entry.phi_small) {
      std::vector<std::int64_t> small(c_.size());
      bool fits = true;
      for (std::size_t k = 0; k < c_.size() && fits; ++k) {
        if (boost::multiprecision::abs(c_[k]) > BigInt(1) << 60) {
          fits = false;
        } else {
          small[k] = static_cast<std::int64_t>(c_[k]);
        }
      }
      if (fits) {
        if (auto res = detail::remainder_is_zero_i64(std::move(small), *entry.phi_small)) {
          return *res;
        }
      }
    }
    return detail::remainder_is_zero(c_, entry.phi);
  }

  CyclotomicInteger conj() const {
    CyclotomicInteger z(r_);
    const auto n = c_.size();
    for (std::size_t k = 0; k < n; ++k) z.c_[(n - k) % n] = c_[k];
    return z;
  }

  /// Multiplication by w_r^k; a cyclic shift.
  CyclotomicInteger shifted(std::int64_t k) const {
    CyclotomicInteger z(r_);
    const auto n = static_cast<std::int64_t>(c_.size());
    for (std::int64_t j = 0; j < n; ++j) {
      z.c_[static_cast<std::size_t>(floor_mod(j + k, n))] = c_[static_cast<std::size_t>(j)];
    }
    return z;
  }

  std::complex<long double> evaluate() const {
    std::complex<long double> sum = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      const long double t = 2.0L * std::numbers::pi_v<long double> *
                            static_cast<long double>(k) / static_cast<long double>(r_);
      sum += static_cast<long double>(c_[k]) * std::complex<long double>(std::cos(t), std::sin(t));
    }
    return sum;
  }

  CyclotomicInteger& operator+=(const CyclotomicInteger& o) { return combine(o, 1); }
  CyclotomicInteger& operator-=(const CyclotomicInteger& o) { return combine(o, -1); }
  CyclotomicInteger& operator*=(const BigInt& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) {
    return a += b;
  }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) {
    return a -= b;
  }
  friend CyclotomicInteger operator-(CyclotomicInteger a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend CyclotomicInteger operator*(CyclotomicInteger a, const BigInt& s) { return a *= s; }

  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    const std::int64_t r = std::lcm(a.r_, b.r_);
    const CyclotomicInteger x = a.rescaled(r);
    const CyclotomicInteger y = b.rescaled(r);
    CyclotomicInteger z(r);
    const auto n = static_cast<std::size_t>(r);
    // Convolution over the nonzero support only; operands are usually sparse.
    std::vector<std::size_t> ys;
    for (std::size_t j = 0; j < n; ++j) {
      if (y.c_[j] != 0) ys.push_back(j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j : ys) {
        std::size_t k = i + j;
        if (k >= n) k -= n;
        z.c_[k] += x.c_[i] * y.c_[j];
      }
    }
    return z;
  }

  /// Exact value equality (lifting to a common order).
  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    return (a - b).is_zero();
  }

 private:
  static std::int64_t check_order(std::int64_t r) {
    if (r < 1) throw InvalidArgumentError("cyclotomic order must be positive");
    return r;
  }

  CyclotomicInteger& combine(const CyclotomicInteger& o, int sign) {
    const std::int64_t r = std::lcm(r_, o.r_);
    if (r != r_) *this = rescaled(r);
    const CyclotomicInteger y = o.rescaled(r);
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (y.c_[k] == 0) continue;
      if (sign > 0) {
        c_[k] += y.c_[k];
      } else {
        c_[k] -= y.c_[k];
      }
    }
    return *this;
  }

  std::int64_t r_;
  std::vector<BigInt> c_;
};

inline bool is_zero(const CyclotomicInteger& z) { return z.is_zero(); }
inline CyclotomicInteger cyc_add(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  return a + b;
}
inline CyclotomicInteger cyc_mul(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  return a * b;
}
inline CyclotomicInteger cyc_conj(const CyclotomicInteger& z) { return z.conj(); }

}  // namespace hadamard

#endif  // HADAMARD_CYCLOTOMIC_HPP
