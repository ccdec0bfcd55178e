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

#ifndef HADAMARD_MATRIX_HPP
#define HADAMARD_MATRIX_HPP

// Matrix representations.
//
//   ExponentMatrix     H[i][j] = w_r^{exp[i][j]} / sqrt(d), exact.
//   ComplexMatrix      floating entries, already including the 1/sqrt(d).
//   CyclotomicMatrix   general exact matrix: entries in Z[w_r] over a common
//                      sqrt(scale_sq) denominator. Carries the intermediate
//                      products of the block construction, which are not
//                      monomial before dephasing.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hadamard/cyclotomic.hpp"
#include "hadamard/errors.hpp"

namespace hadamard {

class ExponentMatrix {
 public:
  ExponentMatrix() = default;

  /// Row-major exponents; canonicalized modulo r.
  ExponentMatrix(std::size_t d, std::int64_t r, std::vector<std::int64_t> exps)
      : d_(d), r_(r), e_(std::move(exps)) {
    if (r < 1) throw InvalidArgumentError("root order must be positive");
    if (e_.size() != d * d) throw DimensionMismatchError("exponent grid is not d x d");
    for (auto& x : e_) x = floor_mod(x, r);
  }

  static ExponentMatrix from_rows(std::int64_t r,
                                  const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t d = rows.size();
    std::vector<std::int64_t> flat;
    flat.reserve(d * d);
    for (const auto& row : rows) {
      if (row.size() != d) throw DimensionMismatchError("exponent grid is not square");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return {d, r, std::move(flat)};
  }

  static ExponentMatrix identity_like_zero(std::size_t d, std::int64_t r = 1) {
    return {d, r, std::vector<std::int64_t>(d * d, 0)};
  }

  std::size_t order() const { return d_; }
  std::int64_t root() const { return r_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return e_[i * d_ + j]; }
  std::int64_t& at(std::size_t i, std::size_t j) { return e_[i * d_ + j]; }
  std::span<const std::int64_t> row(std::size_t i) const {
    return {e_.data() + i * d_, d_};
  }
  const std::vector<std::int64_t>& exponents() const { return e_; }

  /// Same matrix over r_new-th roots.
  ExponentMatrix lifted(std::int64_t r_new) const {
    if (r_new < 1 || r_new % r_ != 0) {
      throw InvalidRescaleError("cannot lift root " + std::to_string(r_) + " to " +
                                std::to_string(r_new));
    }
    std::vector<std::int64_t> e = e_;
    for (auto& x : e) x *= r_new / r_;
    return {d_, r_new, std::move(e)};
  }

  bool is_dephased() const {
    for (std::size_t k = 0; k < d_; ++k) {
      if ((*this)(0, k) != 0 || (*this)(k, 0) != 0) return false;
    }
    return true;
  }

  ExponentMatrix transposed() const {
    std::vector<std::int64_t> e(e_.size());
    for (std::size_t i = 0; i < d_; ++i) {
      for (std::size_t j = 0; j < d_; ++j) e[j * d_ + i] = (*this)(i, j);
    }
    return {d_, r_, std::move(e)};
  }

  /// Identical root order and exponents.
  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  std::size_t d_ = 0;
  std::int64_t r_ = 1;
  std::vector<std::int64_t> e_;
};

/// Equal as complex matrices (compared at the lcm of the root orders).
inline bool same_values(const ExponentMatrix& a, const ExponentMatrix& b) {
  if (a.order() != b.order()) return false;
  const std::int64_t r = std::lcm(a.root(), b.root());
  return a.lifted(r) == b.lifted(r);
}

/// Kronecker product A (x) B in exponent form.
inline ExponentMatrix kron(const ExponentMatrix& a, const ExponentMatrix& b) {
  const std::int64_t r = std::lcm(a.root(), b.root());
  const ExponentMatrix x = a.lifted(r);
  const ExponentMatrix y = b.lifted(r);
  const std::size_t n = a.order() * b.order();
  std::vector<std::int64_t> e(n * n);
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      for (std::size_t k = 0; k < b.order(); ++k)
        for (std::size_t l = 0; l < b.order(); ++l)
          e[(i * b.order() + k) * n + j * b.order() + l] = x(i, j) + y(k, l);
  return {n, r, std::move(e)};
}

struct ComplexMatrix {
  Eigen::MatrixXcd entries;

  ComplexMatrix() = default;
  explicit ComplexMatrix(Eigen::MatrixXcd m) : entries(std::move(m)) {}

  std::size_t order() const { return static_cast<std::size_t>(entries.rows()); }
  std::complex<double> operator()(std::size_t i, std::size_t j) const {
    return entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
};

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto m = a.entries.rows();
  const auto n = b.entries.rows();
  Eigen::MatrixXcd out(m * n, m * n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      out.block(i * n, j * n, n, n) = a.entries(i, j) * b.entries;
  return ComplexMatrix(std::move(out));
}

inline ComplexMatrix to_complex(const ExponentMatrix& h) {
  const auto d = static_cast<Eigen::Index>(h.order());
  const double scale = 1.0 / std::sqrt(static_cast<double>(h.order()));
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      m(i, j) = scale * RootExponent(h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)),
                                     h.root())
                            .value();
    }
  }
  return ComplexMatrix(std::move(m));
}

/// Exact matrix with entries in Z[w_r] divided by sqrt(scale_sq).
class CyclotomicMatrix {
 public:
  CyclotomicMatrix() = default;
  CyclotomicMatrix(std::size_t rows, std::size_t cols, std::int64_t r, std::int64_t scale_sq)
      : rows_(rows), cols_(cols), r_(r), scale_sq_(scale_sq),
        z_(rows * cols, CyclotomicInteger(r)) {
    if (scale_sq < 1) throw InvalidArgumentError("scale must be positive");
  }

  static CyclotomicMatrix from_exponents(const ExponentMatrix& h) {
    CyclotomicMatrix m(h.order(), h.order(), h.root(), static_cast<std::int64_t>(h.order()));
    for (std::size_t i = 0; i < h.order(); ++i)
      for (std::size_t j = 0; j < h.order(); ++j)
        m.at(i, j) = CyclotomicInteger::monomial(RootExponent(h(i, j), h.root()));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t root() const { return r_; }
  std::int64_t scale_sq() const { return scale_sq_; }
  const CyclotomicInteger& operator()(std::size_t i, std::size_t j) const {
    return z_[i * cols_ + j];
  }
  CyclotomicInteger& at(std::size_t i, std::size_t j) { return z_[i * cols_ + j]; }

  CyclotomicMatrix lifted(std::int64_t r_new) const {
    CyclotomicMatrix m = *this;
    m.r_ = r_new;
    for (auto& z : m.z_) z = z.rescaled(r_new);
    return m;
  }

  CyclotomicMatrix adjoint() const {
    CyclotomicMatrix m(cols_, rows_, r_, scale_sq_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = (*this)(i, j).conj();
    return m;
  }

  friend CyclotomicMatrix operator*(const CyclotomicMatrix& a, const CyclotomicMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatchError("matrix product dimensions");
    const std::int64_t r = std::lcm(a.r_, b.r_);
    const CyclotomicMatrix x = a.lifted(r);
    const CyclotomicMatrix y = b.lifted(r);
    CyclotomicMatrix m(a.rows_, b.cols_, r, a.scale_sq_ * b.scale_sq_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const CyclotomicInteger& u = x(i, k);
        if (std::all_of(u.coeffs().begin(), u.coeffs().end(),
                        [](const BigInt& c) { return c == 0; })) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j) += u * y(k, j);
      }
    }
    return m;
  }

  ComplexMatrix to_complex() const {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
    const long double s = 1.0L / std::sqrt(static_cast<long double>(scale_sq_));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const auto v = (*this)(i, j).evaluate() * s;
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {
            static_cast<double>(v.real()), static_cast<double>(v.imag())};
      }
    }
    return ComplexMatrix(std::move(m));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::int64_t r_ = 1;
  std::int64_t scale_sq_ = 1;
  std::vector<CyclotomicInteger> z_;
};

namespace detail {
inline std::optional<std::int64_t> exact_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  for (std::int64_t c = std::max<std::int64_t>(0, s - 1); c <= s + 1; ++c) {
    if (c * c == n) return c;
  }
  return std::nullopt;
}
}  // namespace detail

/// Exact equality of the represented complex matrices.
inline bool exactly_equal(const CyclotomicMatrix& a, const CyclotomicMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  // a / sqrt(sa) == b / sqrt(sb)  <=>  a * sqrt(sb/sa) == b when sb/sa is a square.
  BigInt fa = 1;
  BigInt fb = 1;
  const std::int64_t sa = a.scale_sq();
  const std::int64_t sb = b.scale_sq();
  if (sa != sb) {
    const std::int64_t g = std::gcd(sa, sb);
    const auto ra = detail::exact_sqrt(sa / g);
    const auto rb = detail::exact_sqrt(sb / g);
    if (!ra || !rb) {
      throw InvalidArgumentError("scales differ by a non-square factor");
    }
    fa = *rb;
    fb = *ra;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) * fa - b(i, j) * fb).is_zero()) return false;
    }
  }
  return true;
}

/// H -> D1 P1 H P2 D2. Entry (i,j) of the result is
/// row_phases[i] * H(row_perm[i], col_perm[j]) * col_phases[j].
template <class Phase>
struct EquivalenceMove {
  std::vector<std::size_t> row_perm;
  std::vector<std::size_t> col_perm;
  std::vector<Phase> row_phases;
  std::vector<Phase> col_phases;

  static EquivalenceMove identity(std::size_t d, Phase unit = Phase{}) {
    EquivalenceMove m;
    m.row_perm.resize(d);
    m.col_perm.resize(d);
    std::iota(m.row_perm.begin(), m.row_perm.end(), std::size_t{0});
    std::iota(m.col_perm.begin(), m.col_perm.end(), std::size_t{0});
    m.row_phases.assign(d, unit);
    m.col_phases.assign(d, unit);
    return m;
  }
};

using ExactMove = EquivalenceMove<RootExponent>;
/// Phases are angles in radians.
using FloatMove = EquivalenceMove<double>;

template <class M, class Move>
struct Dephased {
  M matrix;
  Move move;
};

namespace detail {
inline void check_permutation(const std::vector<std::size_t>& p, std::size_t d) {
  if (p.size() != d) throw DimensionMismatchError("permutation length does not match order");
  std::vector<bool> seen(d, false);
  for (std::size_t x : p) {
    if (x >= d || seen[x]) throw InvalidArgumentError("not a permutation");
    seen[x] = true;
  }
}

template <class Phase>
void check_move(const EquivalenceMove<Phase>& m, std::size_t d) {
  check_permutation(m.row_perm, d);
  check_permutation(m.col_perm, d);
  if (m.row_phases.size() != d || m.col_phases.size() != d) {
    throw DimensionMismatchError("phase list length does not match order");
  }
}
}  // namespace detail

inline ExponentMatrix apply_equivalence(const ExponentMatrix& h, const ExactMove& m) {
  const std::size_t d = h.order();
  detail::check_move(m, d);
  std::int64_t r = h.root();
  for (const auto& p : m.row_phases) r = std::lcm(r, p.r);
  for (const auto& p : m.col_phases) r = std::lcm(r, p.r);
  const std::int64_t step = r / h.root();
  std::vector<std::int64_t> e(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::int64_t ri = rescale(m.row_phases[i], r).k;
    for (std::size_t j = 0; j < d; ++j) {
      e[i * d + j] = ri + h(m.row_perm[i], m.col_perm[j]) * step + rescale(m.col_phases[j], r).k;
    }
  }
  return {d, r, std::move(e)};
}

inline ComplexMatrix apply_equivalence(const ComplexMatrix& h, const FloatMove& m) {
  const std::size_t d = h.order();
  detail::check_move(m, d);
  Eigen::MatrixXcd out(h.entries.rows(), h.entries.cols());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::polar(1.0, m.row_phases[i] + m.col_phases[j]) * h(m.row_perm[i], m.col_perm[j]);
    }
  }
  return ComplexMatrix(std::move(out));
}

/// Divides row i by entry (i,0), then column j by the resulting entry (0,j).
inline Dephased<ExponentMatrix, ExactMove> dephase(const ExponentMatrix& h) {
  const std::size_t d = h.order();
  const std::int64_t r = h.root();
  ExactMove move = ExactMove::identity(d, RootExponent(0, r));
  for (std::size_t i = 0; i < d; ++i) move.row_phases[i] = RootExponent(-h(i, 0), r);
  for (std::size_t j = 0; j < d; ++j) move.col_phases[j] = RootExponent(-(h(0, j) - h(0, 0)), r);
  return {apply_equivalence(h, move), std::move(move)};
}

constexpr double kUnimodularTolerance = 1e-9;

inline void require_hadamard_form(const ComplexMatrix& h) {
  const double target = 1.0 / std::sqrt(static_cast<double>(h.order()));
  for (Eigen::Index i = 0; i < h.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.entries.cols(); ++j) {
      const double a = std::abs(h.entries(i, j));
      if (!std::isfinite(a) || std::abs(a - target) > kUnimodularTolerance) {
        throw NotHadamardFormError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") does not have modulus 1/sqrt(d)");
      }
    }
  }
}

inline Dephased<ComplexMatrix, FloatMove> dephase(const ComplexMatrix& h) {
  if (h.entries.rows() != h.entries.cols()) throw DimensionMismatchError("matrix is not square");
  require_hadamard_form(h);
  const std::size_t d = h.order();
  FloatMove move = FloatMove::identity(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) move.row_phases[i] = -std::arg(h(i, 0));
  for (std::size_t j = 0; j < d; ++j) move.col_phases[j] = -(std::arg(h(0, j)) - std::arg(h(0, 0)));
  return {apply_equivalence(h, move), std::move(move)};
}

/// Exact: off-diagonal Gram entries vanish in Z[w_r].
inline bool is_unitary(const ExponentMatrix& h) {
  const std::size_t d = h.order();
  const auto r = static_cast<std::size_t>(h.root());
  std::vector<std::int64_t> counts(r);
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = u + 1; v < d; ++v) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t k = 0; k < d; ++k) {
        ++counts[static_cast<std::size_t>(floor_mod(h(u, k) - h(v, k), h.root()))];
      }
      if (!is_zero_counts(counts)) return false;
    }
  }
  return true;
}

inline double unitarity_error(const ComplexMatrix& h) {
  const auto d = h.entries.rows();
  const Eigen::MatrixXcd g = h.entries * h.entries.adjoint() - Eigen::MatrixXcd::Identity(d, d);
  return g.cwiseAbs().maxCoeff();
}

/// Float: max |H H^+ - I| <= 1e-9 d.
inline bool is_unitary(const ComplexMatrix& h) {
  if (h.entries.rows() != h.entries.cols()) return false;
  return unitarity_error(h) <= 1e-9 * static_cast<double>(h.order());
}

inline bool is_unitary(const CyclotomicMatrix& h) {
  if (h.rows() != h.cols()) return false;
  const std::size_t d = h.rows();
  std::vector<CyclotomicInteger> conj_rows;
  conj_rows.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) conj_rows.push_back(h(i, k).conj());
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = u; v < d; ++v) {
      CyclotomicInteger g(h.root());
      for (std::size_t k = 0; k < d; ++k) g += h(u, k) * conj_rows[v * d + k];
      if (u == v) g -= CyclotomicInteger::constant(h.root(), h.scale_sq());
      if (!g.is_zero()) return false;
    }
  }
  return true;
}

struct ButsonForm {
  std::int64_t root = 1;
  ExponentMatrix matrix;
};

/// Smallest r' such that the dephased matrix has only r'-th roots, with the
/// matrix re-expressed over that root.
inline ButsonForm butson_min_root(const ExponentMatrix& h) {
  const ExponentMatrix m = h.is_dephased() ? h : dephase(h).matrix;
  std::int64_t g = m.root();
  for (std::int64_t x : m.exponents()) g = std::gcd(g, x);
  const std::int64_t r = m.root() / g;
  std::vector<std::int64_t> e = m.exponents();
  for (auto& x : e) x /= g;
  return {r, ExponentMatrix(m.order(), r, std::move(e))};
}

/// Recovers an exponent form when every entry is an r-th root of unity
/// (times 1/sqrt(d)) for some r <= max_root; picks the smallest such r.
inline std::optional<ExponentMatrix> to_exponent(const ComplexMatrix& h, std::int64_t max_root = 1024,
                                                 double tol = 1e-8) {
  if (h.entries.rows() != h.entries.cols()) return std::nullopt;
  const std::size_t d = h.order();
  const double scale = std::sqrt(static_cast<double>(d));
  std::vector<double> turns;
  turns.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto z = h(i, j) * scale;
      if (std::abs(std::abs(z) - 1.0) > tol) return std::nullopt;
      turns.push_back(std::arg(z) / (2.0 * std::numbers::pi));
    }
  }
  for (std::int64_t r = 1; r <= max_root; ++r) {
    std::vector<std::int64_t> e;
    e.reserve(turns.size());
    bool ok = true;
    for (double t : turns) {
      const double x = t * static_cast<double>(r);
      const double k = std::round(x);
      if (std::abs(x - k) * 2.0 * std::numbers::pi / static_cast<double>(r) > tol) {
        ok = false;
        break;
      }
      e.push_back(static_cast<std::int64_t>(k));
    }
    if (ok) return ExponentMatrix(d, r, std::move(e));
  }
  return std::nullopt;
}

/// Dephases a general exact matrix whose entries share one modulus and
/// expresses the result over roots of unity. Entry (i,j) of the dephased
/// matrix is Z_ij Z_00 / (Z_i0 Z_0j); each candidate root is read off
/// numerically and then confirmed exactly.
inline ExponentMatrix dephase_to_exponents(const CyclotomicMatrix& z) {
  if (z.rows() != z.cols()) throw DimensionMismatchError("matrix is not square");
  const std::size_t d = z.rows();
  const std::int64_t r = std::lcm<std::int64_t>(2, z.root());
  const CyclotomicMatrix m = z.lifted(r);
  std::vector<std::complex<long double>> val(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) val[i * d + j] = m(i, j).evaluate();
  std::vector<std::int64_t> e(d * d, 0);
  for (std::size_t i = 1; i < d; ++i) {
    const CyclotomicInteger lhs_base = m(0, 0);
    for (std::size_t j = 1; j < d; ++j) {
      const auto q = val[i * d + j] * val[0] / (val[i * d] * val[j]);
      const long double turns = std::arg(q) / (2.0L * std::numbers::pi_v<long double>);
      const auto k = static_cast<std::int64_t>(std::llround(turns * static_cast<long double>(r)));
      const CyclotomicInteger lhs = m(i, j) * lhs_base;
      const CyclotomicInteger rhs = (m(i, 0) * m(0, j)).shifted(floor_mod(k, r));
      if (!(lhs - rhs).is_zero()) {
        throw NotButsonError("dephased entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") is not a root of unity of order " + std::to_string(r));
      }
      e[i * d + j] = k;
    }
  }
  return {d, r, std::move(e)};
}

}  // namespace hadamard

#endif  // HADAMARD_MATRIX_HPP
