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

#ifndef HADAMARD_TESTS_SUPPORT_HPP
#define HADAMARD_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hadamard.hpp"

namespace testing_support {

inline hadamard::ExactMove random_move(std::size_t d, std::int64_t r, std::mt19937_64& rng) {
  hadamard::ExactMove m = hadamard::ExactMove::identity(d, hadamard::RootExponent(0, r));
  std::shuffle(m.row_perm.begin(), m.row_perm.end(), rng);
  std::shuffle(m.col_perm.begin(), m.col_perm.end(), rng);
  for (auto& p : m.row_phases) p = hadamard::RootExponent(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(r)), r);
  for (auto& p : m.col_phases) p = hadamard::RootExponent(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(r)), r);
  return m;
}

inline hadamard::FloatMove random_float_move(std::size_t d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-3.14, 3.14);
  hadamard::FloatMove m = hadamard::FloatMove::identity(d, 0.0);
  std::shuffle(m.row_perm.begin(), m.row_perm.end(), rng);
  std::shuffle(m.col_perm.begin(), m.col_perm.end(), rng);
  for (auto& p : m.row_phases) p = angle(rng);
  for (auto& p : m.col_phases) p = angle(rng);
  return m;
}

/// A random valid assignment: K and L drawn from the complete set with no
/// basis shared between the sides, M a random equivalent of F_p.
inline hadamard::BlockAssignment random_assignment(std::int64_t p, std::int64_t q, std::mt19937_64& rng,
                                                   bool random_m = true) {
  const hadamard::MubSet set = hadamard::complete_mub_set(q);
  const std::size_t n = set.bases.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  // Split the bases: a K pool and an L pool, both nonempty.
  const std::size_t cut = 1 + rng() % (n - 1);
  hadamard::BlockAssignment a;
  a.p = p;
  a.q = q;
  for (std::int64_t m = 0; m < p; ++m) a.k.push_back(set.bases[order[rng() % cut]]);
  for (std::int64_t m = 0; m < p; ++m) a.l.push_back(set.bases[order[cut + rng() % (n - cut)]]);
  const auto pp = static_cast<std::size_t>(p);
  a.m = hadamard::fourier(pp);
  if (random_m) {
    a.m = hadamard::apply_equivalence(a.m, random_move(pp, 2 * p, rng));
    a.canonical_m = false;
  }
  return a;
}

/// Catalog entries small enough for repeated exact work.
inline std::vector<std::string> small_catalog(std::size_t max_order = 15) {
  std::vector<std::string> out;
  for (const auto& e : hadamard::catalog())
    if (e.d <= max_order) out.push_back(e.name);
  return out;
}

}  // namespace testing_support

#endif  // HADAMARD_TESTS_SUPPORT_HPP
