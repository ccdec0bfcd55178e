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

#ifndef HADAMARD_DEFECT_HPP
#define HADAMARD_DEFECT_HPP

// Defect of a dephased complex Hadamard matrix H: (d-1)^2 minus the rank of
// the first-order system for phase perturbations H_ij -> e^{i a_ij} H_ij
// with a frozen to 0 on the first row and column,
//
//     sum_k H_uk conj(H_vk) (a_uk - a_vk) = 0,   u != v.
//
// Diagonal rows vanish identically and are left out.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "hadamard/errors.hpp"
#include "hadamard/matrix.hpp"
#include "hadamard/modular.hpp"

namespace hadamard {

enum class DefectMode { kAuto, kExact, kFloat };

inline std::string to_string(DefectMode m) {
  switch (m) {
    case DefectMode::kExact: return "exact";
    case DefectMode::kFloat: return "float";
    default: return "auto";
  }
}

/// Orders up to this use exact rank in kAuto mode.
inline constexpr std::size_t kExactDefectMaxOrder = 49;

struct DefectReport {
  std::int64_t defect = 0;
  std::int64_t variables = 0;
  std::int64_t rank = 0;
  DefectMode mode = DefectMode::kExact;
  std::size_t rows = 0;
  // Exact evidence: pivot count per prime.
  std::vector<std::uint64_t> primes;
  std::vector<std::int64_t> pivots;
  // Float evidence.
  double cut = 0.0;
  std::vector<double> kept_near_gap;     // smallest singular values above the cut
  std::vector<double> dropped_near_gap;  // largest singular values below it

  bool isolated() const { return defect == 0; }
};

namespace detail {
inline std::size_t defect_var(std::size_t i, std::size_t k, std::size_t d) { return (i - 1) * (d - 1) + (k - 1); }

inline std::int64_t modular_defect_rank(const ExponentMatrix& h, std::uint64_t prime) {
  const std::size_t d = h.order();
  const auto r = static_cast<std::uint64_t>(h.root());
  const std::uint64_t g = modular::element_of_order(r, prime);
  std::vector<std::uint32_t> pw(r);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < r; ++k) {
    pw[k] = static_cast<std::uint32_t>(x);
    x = modular::mul_mod(x, g, prime);
  }
  const std::size_t n = (d - 1) * (d - 1);
  modular::Matrix m(d * (d - 1), n, prime);
  std::size_t row = 0;
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = 0; v < d; ++v) {
      if (u == v) continue;
      for (std::size_t k = 1; k < d; ++k) {
        const std::uint32_t c = pw[static_cast<std::size_t>(floor_mod(h(u, k) - h(v, k), h.root()))];
        if (u >= 1) m(row, defect_var(u, k, d)) = c;
        if (v >= 1) m(row, defect_var(v, k, d)) = static_cast<std::uint32_t>((prime - c) % prime);
      }
      ++row;
    }
  }
  return static_cast<std::int64_t>(modular::rank(std::move(m)));
}

inline Eigen::MatrixXd defect_system(const ComplexMatrix& h) {
  const std::size_t d = h.order();
  const auto n = static_cast<Eigen::Index>((d - 1) * (d - 1));
  const auto pairs = static_cast<Eigen::Index>(d * (d - 1) / 2);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * pairs, n);
  const double scale = static_cast<double>(d);
  Eigen::Index row = 0;
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = u + 1; v < d; ++v) {
      for (std::size_t k = 1; k < d; ++k) {
        const std::complex<double> c = scale * h(u, k) * std::conj(h(v, k));
        if (u >= 1) {
          const auto j = static_cast<Eigen::Index>(defect_var(u, k, d));
          a(row, j) = c.real();
          a(row + 1, j) = c.imag();
        }
        const auto j = static_cast<Eigen::Index>(defect_var(v, k, d));
        a(row, j) = -c.real();
        a(row + 1, j) = -c.imag();
      }
      row += 2;
    }
  }
  return a;
}
}  // namespace detail

/// Exact rank via reduction modulo primes P = 1 (mod r). Each modular rank is
/// a lower bound for the true rank, so full rank certifies defect 0. A
/// deficient rank is confirmed with a second prime and the larger value kept.
inline DefectReport exact_defect(const ExponentMatrix& input) {
  const ExponentMatrix h = input.is_dephased() ? input : dephase(input).matrix;
  const std::size_t d = h.order();
  DefectReport rep;
  rep.mode = DefectMode::kExact;
  rep.variables = static_cast<std::int64_t>((d - 1) * (d - 1));
  rep.rows = d * (d - 1);
  if (d <= 1) return rep;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const std::uint64_t prime = modular::prime_for_order(static_cast<std::uint64_t>(h.root()), attempt);
    const std::int64_t rk = detail::modular_defect_rank(h, prime);
    rep.primes.push_back(prime);
    rep.pivots.push_back(rk);
    rep.rank = std::max(rep.rank, rk);
    if (rep.rank == rep.variables) break;
  }
  rep.defect = rep.variables - rep.rank;
  return rep;
}

struct FloatRank {
  std::int64_t rank = 0;
  double cut = 0.0;
  bool ambiguous = false;
};

/// Rank of an m x n matrix from its singular values (descending).
inline FloatRank float_rank(const Eigen::VectorXd& s, Eigen::Index m, Eigen::Index n) {
  FloatRank out;
  const double smax = s.size() > 0 ? s(0) : 0.0;
  out.cut = smax * static_cast<double>(std::max(m, n)) * std::numeric_limits<double>::epsilon() * 64.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > out.cut) ++out.rank;
    if (s(i) > out.cut / 1e3 && s(i) < out.cut * 1e3) out.ambiguous = true;
  }
  return out;
}

/// Singular values of an m x n matrix (m >= n), descending. Householder
/// bidiagonalization, then the eigenvalues of the 2n x 2n tridiagonal
/// [[0, B], [B^T, 0]], which are +-sigma_i. Absolute accuracy is about
/// eps ||A||. Eigen 3.4.0's BDCSVD loses that accuracy on these systems.
inline Eigen::VectorXd singular_values(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.cols();
  if (n == 0) return {};
  if (a.rows() < n) return singular_values(a.transpose());
  Eigen::internal::UpperBidiagonalization<Eigen::MatrixXd> bd(a);
  auto b = bd.bidiagonal();
  const Eigen::VectorXd diag = Eigen::VectorXd::Zero(2 * n);
  Eigen::VectorXd sub(2 * n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    sub(2 * i) = b.diagonal()(i);
    if (i + 1 < n) sub(2 * i + 1) = b.template diagonal<1>()(i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw IndeterminateRankError("tridiagonal eigenvalue iteration did not converge");
  return es.eigenvalues().reverse().head(n).cwiseMax(0.0);
}

/// Float rank from singular values. The cut is sigma_max max(m,n) eps 64;
/// any singular value within a factor 10^3 of the cut makes the result
/// indeterminate.
inline DefectReport float_defect(const ComplexMatrix& input) {
  const ComplexMatrix h = dephase(input).matrix;
  const std::size_t d = h.order();
  DefectReport rep;
  rep.mode = DefectMode::kFloat;
  rep.variables = static_cast<std::int64_t>((d - 1) * (d - 1));
  rep.rows = d * (d - 1);
  if (d <= 1) return rep;
  const Eigen::MatrixXd a = detail::defect_system(h);
  const Eigen::VectorXd s = singular_values(a);
  const FloatRank fr = float_rank(s, a.rows(), a.cols());
  rep.cut = fr.cut;
  const auto rk = fr.rank;
  for (Eigen::Index i = std::max<Eigen::Index>(0, rk - 3); i < rk; ++i) rep.kept_near_gap.push_back(s(i));
  for (Eigen::Index i = rk; i < std::min<Eigen::Index>(s.size(), rk + 3); ++i) rep.dropped_near_gap.push_back(s(i));
  rep.rank = rk;
  rep.defect = rep.variables - rk;
  if (fr.ambiguous) {
    throw IndeterminateRankError("singular values lie within 10^3 of the rank cut; use exact mode");
  }
  return rep;
}

inline DefectReport defect(const ExponentMatrix& h, DefectMode mode = DefectMode::kAuto) {
  if (mode == DefectMode::kExact || (mode == DefectMode::kAuto && h.order() <= kExactDefectMaxOrder)) {
    return exact_defect(h);
  }
  return float_defect(to_complex(h));
}

/// Exact mode needs a Butson matrix; it is recovered from the floats when possible.
inline DefectReport defect(const ComplexMatrix& h, DefectMode mode = DefectMode::kFloat) {
  if (mode == DefectMode::kFloat) return float_defect(h);
  if (auto e = to_exponent(dephase(h).matrix)) return defect(*e, mode);
  if (mode == DefectMode::kExact) throw NotButsonError("exact defect needs entries that are roots of unity");
  return float_defect(h);
}

inline bool is_isolated(const ExponentMatrix& h, DefectMode mode = DefectMode::kAuto) {
  return defect(h, mode).defect == 0;
}

inline bool is_isolated(const ComplexMatrix& h) { return defect(h).defect == 0; }

}  // namespace hadamard

#endif  // HADAMARD_DEFECT_HPP
