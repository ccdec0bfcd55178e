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

#ifndef HADAMARD_CONSTRUCT_HPP
#define HADAMARD_CONSTRUCT_HPP

// Block constructions of complex Hadamard matrices of order pq.
//
// The MU-product-basis construction: given order-q unitaries K_0..K_{p-1}
// and L_0..L_{p-1} with every K_m unbiased to every L_n, and a p x p
// Hadamard M = (alpha_ij / sqrt(p)), the matrix with blocks
//
//     H[i][j] = alpha_ij K_i^+ L_j / sqrt(p)
//
// is complex Hadamard. It factors as H = B1^+ B2 with B1 = diag(K_0..K_{p-1})
// and B2[i][j] = alpha_ij L_j / sqrt(p).

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hadamard/cyclotomic.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/matrix.hpp"
#include "hadamard/mub.hpp"

namespace hadamard {

struct BlockAssignment {
  std::int64_t p = 0;
  std::int64_t q = 0;
  ExponentMatrix m;  // p x p; F_p unless non-canonical
  std::vector<Basis> k;
  std::vector<Basis> l;
  bool canonical_m = true;

  std::vector<std::string> k_labels() const {
    std::vector<std::string> out;
    for (const auto& b : k) out.push_back(b.label);
    return out;
  }
  std::vector<std::string> l_labels() const {
    std::vector<std::string> out;
    for (const auto& b : l) out.push_back(b.label);
    return out;
  }
};

/// Resolves basis labels ("I", "F", "H3", and "Hy"/"Hw" for q = 3) against
/// the complete MU set of order q. M defaults to F_p.
inline BlockAssignment make_assignment(std::int64_t p, std::int64_t q,
                                       const std::vector<std::string>& k_labels,
                                       const std::vector<std::string>& l_labels,
                                       const MubSet* set = nullptr) {
  MubSet local;
  if (set == nullptr) {
    local = complete_mub_set(q);
    set = &local;
  }
  BlockAssignment a;
  a.p = p;
  a.q = q;
  a.m = fourier(static_cast<std::size_t>(p));
  for (const auto& s : k_labels) a.k.push_back(set->find(s));
  for (const auto& s : l_labels) a.l.push_back(set->find(s));
  return a;
}

/// Throws unless the assignment is well formed and every K[m] is MU to every L[n].
inline void validate_assignment(const BlockAssignment& a) {
  if (a.p < 1 || a.q < 1) throw InvalidArgumentError("p and q must be positive");
  const auto p = static_cast<std::size_t>(a.p);
  const auto q = static_cast<std::size_t>(a.q);
  if (a.k.size() != p || a.l.size() != p) {
    throw DimensionMismatchError("K and L must each hold p bases");
  }
  if (a.m.order() != p) throw DimensionMismatchError("M must be p x p");
  if (!is_unitary(a.m)) throw InvalidArgumentError("M is not a complex Hadamard matrix");
  for (const auto* side : {&a.k, &a.l}) {
    for (const auto& b : *side) {
      if (b.matrix.order() != q) throw DimensionMismatchError("basis " + b.label + " is not q x q");
      if (!b.identity && !is_unitary(b.matrix)) {
        throw InvalidArgumentError("basis " + b.label + " is not unitary");
      }
    }
  }
  for (std::size_t m = 0; m < p; ++m) {
    for (std::size_t n = 0; n < p; ++n) {
      if (!is_mu_pair(a.k[m], a.l[n])) throw MuViolationError(m, n);
    }
  }
}

/// sqrt(q) for a prime q as an element of Z[w]: the quadratic Gauss sum
/// (times -i when q = 3 mod 4); sqrt(2) = w_8 + w_8^7.
inline CyclotomicInteger sqrt_prime(std::int64_t q) {
  if (!is_prime(q)) throw InvalidArgumentError("sqrt_prime expects a prime");
  CyclotomicInteger s(1);
  if (q == 2) {
    s = CyclotomicInteger::monomial(RootExponent(1, 8)) + CyclotomicInteger::monomial(RootExponent(7, 8));
  } else {
    CyclotomicInteger g(q);
    for (std::int64_t k = 0; k < q; ++k) g += CyclotomicInteger::monomial(RootExponent(k * k, q));
    s = q % 4 == 1 ? g : g * CyclotomicInteger::monomial(RootExponent(3, 4));
  }
  if (!(s * s - CyclotomicInteger::constant(1, q)).is_zero()) {
    throw ConstructionBug("Gauss sum does not square to q");
  }
  return s;
}

namespace detail {
// The basis as an exact q x q matrix with scale_sq = q.
inline CyclotomicMatrix basis_matrix(const Basis& b, std::size_t q) {
  if (!b.identity) return CyclotomicMatrix::from_exponents(b.matrix);
  const CyclotomicInteger root_q = sqrt_prime(static_cast<std::int64_t>(q));
  CyclotomicMatrix m(q, q, root_q.order(), static_cast<std::int64_t>(q));
  for (std::size_t i = 0; i < q; ++i) m.at(i, i) = root_q;
  return m;
}

inline std::int64_t common_root(const std::vector<CyclotomicMatrix>& ms, std::int64_t r) {
  for (const auto& m : ms) r = std::lcm(r, m.root());
  return r;
}
}  // namespace detail

struct BlockFactors {
  CyclotomicMatrix b1;
  CyclotomicMatrix b2;
};

/// B1 = diag(K_0..K_{p-1}); B2 with blocks alpha_ij L_j / sqrt(p). Both unitary.
inline BlockFactors factor_b1_b2(const BlockAssignment& a) {
  validate_assignment(a);
  const auto p = static_cast<std::size_t>(a.p);
  const auto q = static_cast<std::size_t>(a.q);
  std::vector<CyclotomicMatrix> ks;
  std::vector<CyclotomicMatrix> ls;
  for (const auto& b : a.k) ks.push_back(detail::basis_matrix(b, q));
  for (const auto& b : a.l) ls.push_back(detail::basis_matrix(b, q));
  const std::int64_t r1 = detail::common_root(ks, 1);
  const std::int64_t r2 = detail::common_root(ls, a.m.root());
  const std::size_t d = p * q;
  CyclotomicMatrix b1(d, d, r1, static_cast<std::int64_t>(q));
  for (std::size_t m = 0; m < p; ++m) {
    const CyclotomicMatrix km = ks[m].lifted(r1);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j) b1.at(m * q + i, m * q + j) = km(i, j);
  }
  CyclotomicMatrix b2(d, d, r2, static_cast<std::int64_t>(p * q));
  for (std::size_t n = 0; n < p; ++n) {
    const CyclotomicMatrix ln = ls[n].lifted(r2);
    for (std::size_t i = 0; i < p; ++i) {
      const std::int64_t alpha = a.m(i, n) * (r2 / a.m.root());
      for (std::size_t s = 0; s < q; ++s)
        for (std::size_t t = 0; t < q; ++t) b2.at(i * q + s, n * q + t) = ln(s, t).shifted(alpha);
    }
  }
  return {std::move(b1), std::move(b2)};
}

/// The block matrix as an exact CyclotomicMatrix (raw, not dephased).
inline CyclotomicMatrix theorem1_exact(const BlockAssignment& a) {
  validate_assignment(a);
  const auto p = static_cast<std::size_t>(a.p);
  const auto q = static_cast<std::size_t>(a.q);
  std::vector<CyclotomicMatrix> ks;
  std::vector<CyclotomicMatrix> ls;
  for (const auto& b : a.k) ks.push_back(detail::basis_matrix(b, q).adjoint());
  for (const auto& b : a.l) ls.push_back(detail::basis_matrix(b, q));
  std::vector<CyclotomicMatrix> blocks;
  blocks.reserve(p * p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) blocks.push_back(ks[i] * ls[j]);
  const std::int64_t r = detail::common_root(blocks, a.m.root());
  const std::size_t d = p * q;
  CyclotomicMatrix h(d, d, r, static_cast<std::int64_t>(p * q * q));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const CyclotomicMatrix blk = blocks[i * p + j].lifted(r);
      const std::int64_t alpha = a.m(i, j) * (r / a.m.root());
      for (std::size_t s = 0; s < q; ++s)
        for (std::size_t t = 0; t < q; ++t) h.at(i * q + s, j * q + t) = blk(s, t).shifted(alpha);
    }
  }
  return h;
}

/// Dephased exponent form of the block matrix at its minimal root order.
/// Throws NotButsonError when the dephased entries are not roots of unity.
inline ExponentMatrix theorem1_build(const BlockAssignment& a) {
  return butson_min_root(dephase_to_exponents(theorem1_exact(a))).matrix;
}

/// Float counterpart for arbitrary unitary inputs.
struct ComplexAssignment {
  std::int64_t p = 0;
  std::int64_t q = 0;
  Eigen::MatrixXcd m;  // includes the 1/sqrt(p)
  std::vector<Eigen::MatrixXcd> k;
  std::vector<Eigen::MatrixXcd> l;
};

inline Eigen::MatrixXcd basis_to_complex(const Basis& b) {
  const auto q = static_cast<Eigen::Index>(b.matrix.order());
  if (b.identity) return Eigen::MatrixXcd::Identity(q, q);
  return to_complex(b.matrix).entries;
}

inline ComplexAssignment to_complex(const BlockAssignment& a) {
  ComplexAssignment c;
  c.p = a.p;
  c.q = a.q;
  c.m = to_complex(a.m).entries;
  for (const auto& b : a.k) c.k.push_back(basis_to_complex(b));
  for (const auto& b : a.l) c.l.push_back(basis_to_complex(b));
  return c;
}

inline void validate_assignment(const ComplexAssignment& a) {
  const auto p = static_cast<std::size_t>(a.p);
  const auto q = static_cast<Eigen::Index>(a.q);
  if (a.k.size() != p || a.l.size() != p) throw DimensionMismatchError("K and L must each hold p bases");
  if (a.m.rows() != a.p || a.m.cols() != a.p) throw DimensionMismatchError("M must be p x p");
  for (const auto* side : {&a.k, &a.l})
    for (const auto& b : *side)
      if (b.rows() != q || b.cols() != q) throw DimensionMismatchError("basis is not q x q");
  for (std::size_t m = 0; m < p; ++m)
    for (std::size_t n = 0; n < p; ++n)
      if (!is_mu_pair(ComplexMatrix(a.k[m]), ComplexMatrix(a.l[n]))) throw MuViolationError(m, n);
}

inline ComplexMatrix theorem1_build(const ComplexAssignment& a) {
  validate_assignment(a);
  const auto p = static_cast<Eigen::Index>(a.p);
  const auto q = static_cast<Eigen::Index>(a.q);
  Eigen::MatrixXcd h(p * q, p * q);
  for (Eigen::Index i = 0; i < p; ++i)
    for (Eigen::Index j = 0; j < p; ++j)
      h.block(i * q, j * q, q, q) =
          a.m(i, j) * a.k[static_cast<std::size_t>(i)].adjoint() * a.l[static_cast<std::size_t>(j)];
  return ComplexMatrix(std::move(h));
}

struct ComplexFactors {
  ComplexMatrix b1;
  ComplexMatrix b2;
};

inline ComplexFactors factor_b1_b2(const ComplexAssignment& a) {
  validate_assignment(a);
  const auto p = static_cast<Eigen::Index>(a.p);
  const auto q = static_cast<Eigen::Index>(a.q);
  Eigen::MatrixXcd b1 = Eigen::MatrixXcd::Zero(p * q, p * q);
  Eigen::MatrixXcd b2(p * q, p * q);
  for (Eigen::Index i = 0; i < p; ++i) {
    b1.block(i * q, i * q, q, q) = a.k[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < p; ++j) b2.block(i * q, j * q, q, q) = a.m(i, j) * a.l[static_cast<std::size_t>(j)];
  }
  return {ComplexMatrix(std::move(b1)), ComplexMatrix(std::move(b2))};
}

/// An exact column vector v / sqrt(scale_sq).
struct ExactVector {
  std::vector<CyclotomicInteger> entries;
  std::int64_t scale_sq = 1;
};

struct ProductColumn {
  std::string label;  // e.g. "0z(x)I[2]" or "1a(x)H2[0]"
  ExactVector left;   // C^p factor
  ExactVector right;  // C^q factor
};

struct ProductBasisView {
  std::vector<ProductColumn> columns;

  /// Columns side by side: entry (i q + s, c) = left_c[i] right_c[s].
  CyclotomicMatrix assemble() const {
    const std::size_t d = columns.size();
    if (d == 0) return {};
    std::int64_t r = 1;
    for (const auto& c : columns) {
      for (const auto& z : c.left.entries) r = std::lcm(r, z.order());
      for (const auto& z : c.right.entries) r = std::lcm(r, z.order());
    }
    const std::int64_t scale = columns.front().left.scale_sq * columns.front().right.scale_sq;
    CyclotomicMatrix m(d, d, r, scale);
    for (std::size_t c = 0; c < d; ++c) {
      const auto& col = columns[c];
      if (col.left.scale_sq * col.right.scale_sq != scale) {
        throw InvalidArgumentError("product columns use different scales");
      }
      const std::size_t q = col.right.entries.size();
      for (std::size_t i = 0; i < col.left.entries.size(); ++i)
        for (std::size_t s = 0; s < q; ++s) m.at(i * q + s, c) = (col.left.entries[i] * col.right.entries[s]).rescaled(r);
    }
    return m;
  }
};

/// The two MU product bases: {|m_z> (x) K_m} and {|n_a> (x) L_n}, where |m_z>
/// is the standard basis of C^p and |n_a> the n-th column of M.
inline std::pair<ProductBasisView, ProductBasisView> product_basis_view(const BlockAssignment& a) {
  validate_assignment(a);
  const auto p = static_cast<std::size_t>(a.p);
  const auto q = static_cast<std::size_t>(a.q);
  ProductBasisView first;
  ProductBasisView second;
  for (std::size_t m = 0; m < p; ++m) {
    const CyclotomicMatrix km = detail::basis_matrix(a.k[m], q);
    for (std::size_t c = 0; c < q; ++c) {
      ProductColumn col;
      col.label = std::to_string(m) + "z(x)" + a.k[m].label + "[" + std::to_string(c) + "]";
      col.left.scale_sq = 1;
      for (std::size_t i = 0; i < p; ++i) col.left.entries.push_back(CyclotomicInteger::constant(1, i == m ? 1 : 0));
      col.right.scale_sq = static_cast<std::int64_t>(q);
      for (std::size_t s = 0; s < q; ++s) col.right.entries.push_back(km(s, c));
      first.columns.push_back(std::move(col));
    }
  }
  for (std::size_t n = 0; n < p; ++n) {
    const CyclotomicMatrix ln = detail::basis_matrix(a.l[n], q);
    for (std::size_t c = 0; c < q; ++c) {
      ProductColumn col;
      col.label = std::to_string(n) + "a(x)" + a.l[n].label + "[" + std::to_string(c) + "]";
      col.left.scale_sq = a.p;
      for (std::size_t i = 0; i < p; ++i) col.left.entries.push_back(CyclotomicInteger::monomial(RootExponent(a.m(i, n), a.m.root())));
      col.right.scale_sq = static_cast<std::int64_t>(q);
      for (std::size_t s = 0; s < q; ++s) col.right.entries.push_back(ln(s, c));
      second.columns.push_back(std::move(col));
    }
  }
  return {std::move(first), std::move(second)};
}

/// K_1 = ... = K_{p-1} = I and L_n = diag(1, e^{i a^n_1}, ..., e^{i a^n_{q-1}}) F_q.
/// params is (p-1) x (q-1): row n-1 holds a^n.
inline ComplexAssignment trivial_assignment(std::int64_t p, std::int64_t q, const Eigen::MatrixXd& params) {
  if (params.rows() != p - 1 || params.cols() != q - 1) {
    throw DimensionMismatchError("trivial family takes a (p-1) x (q-1) parameter grid");
  }
  ComplexAssignment a;
  a.p = p;
  a.q = q;
  a.m = to_complex(fourier(static_cast<std::size_t>(p))).entries;
  const Eigen::MatrixXcd f = to_complex(fourier(static_cast<std::size_t>(q))).entries;
  for (std::int64_t n = 0; n < p; ++n) {
    a.k.push_back(Eigen::MatrixXcd::Identity(q, q));
    Eigen::VectorXcd phases = Eigen::VectorXcd::Ones(q);
    if (n > 0) {
      for (std::int64_t s = 1; s < q; ++s) phases(s) = std::polar(1.0, params(n - 1, s - 1));
    }
    a.l.push_back(phases.asDiagonal() * f);
  }
  return a;
}

inline ComplexMatrix trivial_family(std::int64_t p, std::int64_t q, const Eigen::MatrixXd& params) {
  return theorem1_build(trivial_assignment(p, q, params));
}

/// H o EXP(i R) for R in the span of `directions` (zero first row and column).
struct AffineFamily {
  ComplexMatrix base;
  std::vector<Eigen::MatrixXd> directions;

  void validate() const {
    const auto d = base.entries.rows();
    for (const auto& r : directions) {
      if (r.rows() != d || r.cols() != d) throw DimensionMismatchError("direction has wrong shape");
      if (r.row(0).cwiseAbs().maxCoeff() != 0.0 || r.col(0).cwiseAbs().maxCoeff() != 0.0) {
        throw InvalidArgumentError("directions must vanish on the first row and column");
      }
    }
  }
};

inline ComplexMatrix affine_member(const AffineFamily& f, const Eigen::VectorXd& t) {
  if (static_cast<std::size_t>(t.size()) != f.directions.size()) {
    throw DimensionMismatchError("parameter vector length does not match the family");
  }
  f.validate();
  const auto d = f.base.entries.rows();
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t m = 0; m < f.directions.size(); ++m) r += t(static_cast<Eigen::Index>(m)) * f.directions[m];
  Eigen::MatrixXcd out(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) out(i, j) = f.base.entries(i, j) * std::polar(1.0, r(i, j));
  return ComplexMatrix(std::move(out));
}

/// The trivial family written as an affine family: parameter a^n_s rotates
/// row s of every block in block column n.
inline AffineFamily trivial_affine_family(std::int64_t p, std::int64_t q) {
  AffineFamily f;
  f.base = trivial_family(p, q, Eigen::MatrixXd::Zero(p - 1, q - 1));
  const auto d = p * q;
  for (std::int64_t n = 1; n < p; ++n) {
    for (std::int64_t s = 1; s < q; ++s) {
      Eigen::MatrixXd r = Eigen::MatrixXd::Zero(d, d);
      for (std::int64_t i = 0; i < p; ++i) r.block(i * q + s, n * q, 1, q).setOnes();
      f.directions.push_back(std::move(r));
    }
  }
  return f;
}

struct DitaResult {
  ComplexMatrix matrix;
  int free_parameters = 0;
};

/// Blocks Q_ij = m_ij D_j N_j with D_1 = I and D_j = diag(1, e^{i t_j1}, ...)
/// for j >= 2; `params` is (k-1) x (v-1). The reported count is
/// m + sum n_i + (k-1)(v-1).
inline DitaResult dita_build(const ComplexMatrix& m, const std::vector<ComplexMatrix>& ns,
                             const Eigen::MatrixXd& params, int m_parameters = 0,
                             const std::vector<int>& n_parameters = {}) {
  const auto k = m.entries.rows();
  if (m.entries.cols() != k || static_cast<Eigen::Index>(ns.size()) != k) {
    throw DimensionMismatchError("Dita construction needs k blocks for a k x k M");
  }
  const auto v = ns.front().entries.rows();
  for (const auto& n : ns) {
    if (n.entries.rows() != v || n.entries.cols() != v) throw DimensionMismatchError("N blocks differ in order");
    if (!dephase(n).matrix.entries.isApprox(n.entries, 1e-9)) {
      throw InvalidArgumentError("Dita blocks must be dephased");
    }
  }
  if (params.rows() != k - 1 || params.cols() != v - 1) {
    throw DimensionMismatchError("Dita parameters must be (k-1) x (v-1)");
  }
  if (!n_parameters.empty() && static_cast<Eigen::Index>(n_parameters.size()) != k) {
    throw DimensionMismatchError("one parameter count per N block");
  }
  Eigen::MatrixXcd q(k * v, k * v);
  for (Eigen::Index j = 0; j < k; ++j) {
    Eigen::VectorXcd phases = Eigen::VectorXcd::Ones(v);
    if (j > 0) {
      for (Eigen::Index s = 1; s < v; ++s) phases(s) = std::polar(1.0, params(j - 1, s - 1));
    }
    const Eigen::MatrixXcd nj = phases.asDiagonal() * ns[static_cast<std::size_t>(j)].entries;
    for (Eigen::Index i = 0; i < k; ++i) q.block(i * v, j * v, v, v) = m.entries(i, j) * nj;
  }
  int count = m_parameters + static_cast<int>((k - 1) * (v - 1));
  for (int n : n_parameters) count += n;
  return {ComplexMatrix(std::move(q)), count};
}

/// Generalised tensor product: block (i,j) = diag([M_1]_ij, ..., [M_v]_ij) N_j.
inline ComplexMatrix hosoya_suzuki_build(const std::vector<ComplexMatrix>& ms,
                                         const std::vector<ComplexMatrix>& ns) {
  const auto v = static_cast<Eigen::Index>(ms.size());
  const auto k = static_cast<Eigen::Index>(ns.size());
  if (v == 0 || k == 0) throw DimensionMismatchError("empty input");
  for (const auto& m : ms)
    if (m.entries.rows() != k || m.entries.cols() != k) throw DimensionMismatchError("each M_s must be k x k");
  for (const auto& n : ns)
    if (n.entries.rows() != v || n.entries.cols() != v) throw DimensionMismatchError("each N_j must be v x v");
  Eigen::MatrixXcd q(k * v, k * v);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      Eigen::VectorXcd diag(v);
      for (Eigen::Index s = 0; s < v; ++s) diag(s) = ms[static_cast<std::size_t>(s)].entries(i, j);
      q.block(i * v, j * v, v, v) = diag.asDiagonal() * ns[static_cast<std::size_t>(j)].entries;
    }
  }
  return ComplexMatrix(std::move(q));
}

}  // namespace hadamard

#endif  // HADAMARD_CONSTRUCT_HPP
