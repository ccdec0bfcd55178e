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

#include <complex>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <catch_amalgamated.hpp>

#include "hadamard/cyclotomic.hpp"

using namespace hadamard;
using Float50 = boost::multiprecision::cpp_bin_float_50;

namespace {

// Phi_r from the product of (x - w^k) over k coprime to r, rounded.
std::vector<long long> phi_by_roots(int r) {
  std::vector<std::complex<long double>> poly{1.0L};
  for (int k = 1; k <= r; ++k) {
    if (std::gcd(k, r) != 1) continue;
    const long double t = 2.0L * std::numbers::pi_v<long double> * k / r;
    const std::complex<long double> w(std::cos(t), std::sin(t));
    std::vector<std::complex<long double>> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= w * poly[i];
    }
    poly = next;
  }
  std::vector<long long> out;
  for (const auto& c : poly) out.push_back(std::llround(c.real()));
  return out;
}

// |sum c_k w^k| evaluated with 50 digits.
Float50 modulus50(const std::vector<std::int64_t>& c) {
  const std::size_t r = c.size();
  Float50 re = 0;
  Float50 im = 0;
  const Float50 two_pi = 2 * boost::math::constants::pi<Float50>();
  for (std::size_t k = 0; k < r; ++k) {
    if (c[k] == 0) continue;
    const Float50 t = two_pi * k / r;
    re += c[k] * cos(t);
    im += c[k] * sin(t);
  }
  return sqrt(re * re + im * im);
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the product over primitive roots", "[cyclotomic]") {
  for (int r = 1; r <= 60; ++r) {
    const auto oracle = phi_by_roots(r);
    const auto& phi = cyclotomic_polynomial(r).coeffs();
    REQUIRE(phi.size() == oracle.size());
    for (std::size_t i = 0; i < phi.size(); ++i) CHECK(phi[i] == oracle[i]);
  }
  CHECK_THROWS_AS(cyclotomic_polynomial(0), InvalidArgumentError);
}

TEST_CASE("zero test agrees with 50-digit evaluation", "[cyclotomic]") {
  std::mt19937_64 rng(20260415);
  const std::vector<int> orders{2, 3, 4, 5, 6, 7, 10, 12, 14, 15, 30, 70};
  int zeros = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int r = orders[rng() % orders.size()];
    std::vector<std::int64_t> c(static_cast<std::size_t>(r), 0);
    if (trial % 2 == 0) {
      // A multiple of Phi_r folded mod x^r - 1 is zero in Z[w_r].
      const auto& phi = cyclotomic_polynomial(r).coeffs();
      const int deg = static_cast<int>(rng() % 4);
      for (int i = 0; i <= deg; ++i) {
        const std::int64_t a = static_cast<std::int64_t>(rng() % 7) - 3;
        for (std::size_t j = 0; j < phi.size(); ++j) {
          c[(static_cast<std::size_t>(i) + j) % static_cast<std::size_t>(r)] += a * static_cast<std::int64_t>(phi[j]);
        }
      }
      if (rng() % 4 == 0) c[rng() % static_cast<std::size_t>(r)] += 1;
    } else {
      for (auto& x : c) x = static_cast<std::int64_t>(rng() % 5) - 2;
    }
    const bool numeric_zero = modulus50(c) < Float50("1e-40");
    zeros += numeric_zero ? 1 : 0;
    REQUIRE(is_zero_counts(c) == numeric_zero);
    REQUIRE(CyclotomicInteger::from_counts(c).is_zero() == numeric_zero);
  }
  CHECK(zeros > 2000);
}

TEST_CASE("root exponents canonicalize and multiply", "[cyclotomic]") {
  CHECK(RootExponent(-1, 6).k == 5);
  CHECK(RootExponent(13, 6) == RootExponent(1, 6));
  CHECK(root_mul(RootExponent(4, 6), RootExponent(5, 6)) == RootExponent(3, 6));
  CHECK_THROWS_AS(root_mul(RootExponent(1, 6), RootExponent(1, 3)), OrderMismatchError);
  CHECK(root_inverse(RootExponent(2, 7)) == RootExponent(5, 7));
  CHECK(rescale(RootExponent(2, 3), 6) == RootExponent(4, 6));
  CHECK_THROWS_AS(rescale(RootExponent(1, 4), 6), InvalidRescaleError);
  CHECK_THROWS_AS(RootExponent(0, 0), InvalidArgumentError);
}

TEST_CASE("cyclotomic integer arithmetic matches complex evaluation", "[cyclotomic]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t ra = std::vector<std::int64_t>{3, 4, 5, 6, 7}[rng() % 5];
    const std::int64_t rb = std::vector<std::int64_t>{2, 3, 5, 10}[rng() % 4];
    std::vector<BigInt> ca(static_cast<std::size_t>(ra));
    std::vector<BigInt> cb(static_cast<std::size_t>(rb));
    for (auto& x : ca) x = static_cast<int>(rng() % 7) - 3;
    for (auto& x : cb) x = static_cast<int>(rng() % 7) - 3;
    const CyclotomicInteger a(ra, ca);
    const CyclotomicInteger b(rb, cb);
    const auto va = a.evaluate();
    const auto vb = b.evaluate();
    CHECK(std::abs((a * b).evaluate() - va * vb) < 1e-12L);
    CHECK(std::abs((a + b).evaluate() - (va + vb)) < 1e-12L);
    CHECK(std::abs((a - b).evaluate() - (va - vb)) < 1e-12L);
    CHECK(std::abs(a.conj().evaluate() - std::conj(va)) < 1e-12L);
    CHECK(std::abs(a.shifted(2).evaluate() - va * std::complex<long double>(RootExponent(2, ra).value())) < 1e-12L);
    CHECK((a * b - b * a).is_zero());
    CHECK(a.rescaled(ra * 4) == a);
  }
}

TEST_CASE("classical identities hold exactly", "[cyclotomic]") {
  // 1 + w + ... + w^{r-1} = 0 for r > 1.
  for (std::int64_t r = 2; r <= 30; ++r) {
    std::vector<std::int64_t> ones(static_cast<std::size_t>(r), 1);
    CHECK(is_zero_counts(ones));
  }
  // w_6 = -w_3^2 and w_4^2 = -1.
  CHECK(CyclotomicInteger::monomial({1, 6}) == -CyclotomicInteger::monomial({2, 3}));
  CHECK(CyclotomicInteger::monomial({2, 4}) == CyclotomicInteger::constant(1, -1));
  CHECK_FALSE(CyclotomicInteger::monomial({1, 5}) == CyclotomicInteger::constant(1, 1));
  CHECK_THROWS_AS(CyclotomicInteger::monomial({1, 4}).rescaled(6), InvalidRescaleError);
  CHECK_THROWS_AS(CyclotomicInteger(3, std::vector<BigInt>(4)), InvalidArgumentError);
}
