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

#ifndef HADAMARD_MUB_HPP
#define HADAMARD_MUB_HPP

// Fourier matrices and complete sets of mutually unbiased bases in prime
// dimension q: {I, F, H_1, ..., H_{q-1}} with H_j = D^j F.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hadamard/cyclotomic.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/matrix.hpp"

namespace hadamard {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

/// F_d with exp[j][k] = jk mod d over d-th roots.
inline ExponentMatrix fourier(std::size_t d) {
  if (d < 1) throw InvalidArgumentError("Fourier order must be positive");
  std::vector<std::int64_t> e(d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) e[j * d + k] = static_cast<std::int64_t>((j * k) % d);
  return {d, static_cast<std::int64_t>(d), std::move(e)};
}

inline ExponentMatrix identity_basis(std::size_t q) {
  // Not a Hadamard matrix; exponent form cannot hold zeros, so the identity
  // is carried as a CyclotomicMatrix where needed. Here we only return the
  // exponents of its nonzero entries (all 0) for labelling purposes.
  return ExponentMatrix::identity_like_zero(q);
}

/// s_k = k(k-1)/2 mod q.
inline std::vector<std::int64_t> formula_diagonal(std::int64_t q) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(q));
  for (std::int64_t k = 0; k < q; ++k) s[static_cast<std::size_t>(k)] = floor_mod(k * (k - 1) / 2, q);
  return s;
}

/// Exponents of the diagonal D generating H_j = D^j F_q.
///
/// q = 3, 5, 7, 11, 13 use the tabulated diagonals the catalog recipes are
/// written against; q = 3 reproduces the bases H_y, H_w. Larger primes use
/// the quadratic rule k(k-1)/2 (which agrees with the table for 7, 11, 13).
inline std::vector<std::int64_t> standard_diagonal(std::int64_t q) {
  if (!is_prime(q)) throw InvalidArgumentError("diagonal requires a prime dimension");
  if (q == 2) throw InvalidArgumentError("q = 2 has no odd-prime diagonal; use complete_mub_set(2)");
  static const std::map<std::int64_t, std::vector<std::int64_t>> table = {
      {3, {0, 1, 1}},
      {5, {0, 1, 4, 4, 1}},
      {7, {0, 0, 1, 3, 6, 3, 1}},
      {11, {0, 0, 1, 3, 6, 10, 4, 10, 6, 3, 1}},
      {13, {0, 0, 1, 3, 6, 10, 2, 8, 2, 10, 6, 3, 1}},
  };
  if (auto it = table.find(q); it != table.end()) return it->second;
  return formula_diagonal(q);
}

/// Whether a basis is the identity (not representable as an ExponentMatrix
/// Hadamard; kept as a tag) or a Hadamard basis in exponent form.
struct Basis {
  std::string label;
  bool identity = false;
  ExponentMatrix matrix;  // meaningful when !identity
};

struct MubSet {
  std::int64_t q = 0;
  std::vector<Basis> bases;
  /// Non-standard data (the q = 2 third basis, the formula-based q = 5 set).
  bool derived = false;
  std::string variant = "standard";

  const Basis& find(const std::string& label) const {
    for (const auto& b : bases) {
      if (b.label == label) return b;
    }
    // H_y and H_w are the q = 3 names of H1 and H2.
    if (q == 3 && (label == "Hy" || label == "Hw")) return find(label == "Hy" ? "H1" : "H2");
    throw ParseError("unknown basis label '" + label + "' for q = " + std::to_string(q));
  }
};

namespace detail {
inline ExponentMatrix diagonal_times(const std::vector<std::int64_t>& diag, std::int64_t power,
                                     const ExponentMatrix& f) {
  const std::size_t q = f.order();
  std::vector<std::int64_t> e(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) e[i * q + j] = f(i, j) + power * diag[i];
  return {q, f.root(), std::move(e)};
}

// |<a_i, b_j>|^2 = 1/q exactly, unscaled: z conj(z) = q with z = sum_k conj(a_ki) b_kj.
inline bool columns_unbiased(const Basis& a, const Basis& b, std::size_t q) {
  if (a.identity && b.identity) return q == 1;
  if (a.identity || b.identity) return true;  // Hadamard vs standard basis
  const std::int64_t r = std::lcm(a.matrix.root(), b.matrix.root());
  const ExponentMatrix x = a.matrix.lifted(r);
  const ExponentMatrix y = b.matrix.lifted(r);
  const auto n = static_cast<std::size_t>(r);
  std::vector<std::int64_t> z(n);
  std::vector<std::int64_t> zz(n);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      std::fill(z.begin(), z.end(), 0);
      for (std::size_t k = 0; k < q; ++k) ++z[static_cast<std::size_t>(floor_mod(y(k, j) - x(k, i), r))];
      std::fill(zz.begin(), zz.end(), 0);
      for (std::size_t s = 0; s < n; ++s) {
        if (z[s] == 0) continue;
        for (std::size_t t = 0; t < n; ++t) {
          if (z[t] != 0) zz[(s + n - t) % n] += z[s] * z[t];
        }
      }
      zz[0] -= static_cast<std::int64_t>(q);
      if (!is_zero_counts(zz)) return false;
    }
  }
  return true;
}
}  // namespace detail

/// Exact MU test for two Hadamard bases of order q (columns are the vectors).
inline bool is_mu_pair(const ExponentMatrix& a, const ExponentMatrix& b) {
  if (a.order() != b.order()) throw DimensionMismatchError("bases have different orders");
  return detail::columns_unbiased(Basis{"", false, a}, Basis{"", false, b}, a.order());
}

inline bool is_mu_pair(const Basis& a, const Basis& b) {
  return detail::columns_unbiased(a, b, a.matrix.order());
}

/// Float MU test: | |<a_i,b_j>|^2 - 1/q | <= 1e-9.
inline bool is_mu_pair(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.order() != b.order()) throw DimensionMismatchError("bases have different orders");
  const Eigen::MatrixXcd g = a.entries.adjoint() * b.entries;
  const double target = 1.0 / static_cast<double>(a.order());
  return ((g.cwiseAbs2().array() - target).abs() <= 1e-9).all();
}

enum class MubVariant { kStandard, kFormula };

/// {I_q, F_q, H_1..H_{q-1}}, verified pairwise MU before returning.
inline MubSet complete_mub_set(std::int64_t q, MubVariant variant = MubVariant::kStandard) {
  if (!is_prime(q)) throw InvalidArgumentError("complete MU sets are generated for prime q only");
  const auto n = static_cast<std::size_t>(q);
  MubSet set;
  set.q = q;
  set.bases.push_back(Basis{"I", true, identity_basis(n)});
  if (q == 2) {
    // diag(1, i) F_2 over fourth roots.
    const ExponentMatrix f = fourier(2).lifted(4);
    set.bases.push_back(Basis{"F", false, f});
    set.bases.push_back(Basis{"H1", false, detail::diagonal_times({0, 1}, 1, f)});
    set.derived = true;
    set.variant = "q2-completion";
  } else {
    const ExponentMatrix f = fourier(n);
    set.bases.push_back(Basis{"F", false, f});
    std::vector<std::int64_t> diag = standard_diagonal(q);
    if (variant == MubVariant::kFormula) {
      diag = formula_diagonal(q);
      set.variant = "formula";
      set.derived = q == 3 || q == 5;
    }
    for (std::int64_t j = 1; j < q; ++j) {
      set.bases.push_back(Basis{"H" + std::to_string(j), false, detail::diagonal_times(diag, j, f)});
    }
  }
  for (std::size_t a = 0; a < set.bases.size(); ++a) {
    if (!set.bases[a].identity && !is_unitary(set.bases[a].matrix)) {
      throw ConstructionBug("basis " + set.bases[a].label + " is not unitary");
    }
    for (std::size_t b = a + 1; b < set.bases.size(); ++b) {
      if (!detail::columns_unbiased(set.bases[a], set.bases[b], n)) {
        throw ConstructionBug("bases " + set.bases[a].label + " and " + set.bases[b].label +
                              " are not mutually unbiased");
      }
    }
  }
  return set;
}

}  // namespace hadamard

#endif  // HADAMARD_MUB_HPP
