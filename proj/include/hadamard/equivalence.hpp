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

#ifndef HADAMARD_EQUIVALENCE_HPP
#define HADAMARD_EQUIVALENCE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "hadamard/errors.hpp"
#include "hadamard/matrix.hpp"

namespace hadamard {

inline constexpr std::size_t kMaxBruteForceOrder = 6;

/// Exhaustive search for a move with apply_equivalence(a, move) == b (as
/// complex matrices). Tries every row and column permutation of `a`,
/// dephases canonically and compares against dephased `b`. Orders above 6
/// are refused: (d!)^2 grows too fast.
inline std::optional<ExactMove> equivalence_search_small(const ExponentMatrix& a,
                                                         const ExponentMatrix& b) {
  if (a.order() != b.order()) throw DimensionMismatchError("orders differ");
  const std::size_t d = a.order();
  if (d > kMaxBruteForceOrder) {
    throw SearchSpaceError("brute-force equivalence search is limited to d <= 6");
  }
  if (butson_min_root(a).root != butson_min_root(b).root) return std::nullopt;

  const std::int64_t r = std::lcm(a.root(), b.root());
  const ExponentMatrix x = a.lifted(r);
  const auto target = dephase(b.lifted(r));

  std::vector<std::size_t> rows(d);
  std::vector<std::size_t> cols(d);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  ExactMove perm = ExactMove::identity(d, RootExponent(0, r));
  do {
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    do {
      perm.row_perm = rows;
      perm.col_perm = cols;
      const auto candidate = dephase(apply_equivalence(x, perm));
      if (candidate.matrix != target.matrix) continue;
      // b = target.move^-1 (candidate.move (P1 a P2)).
      ExactMove witness = perm;
      for (std::size_t i = 0; i < d; ++i) {
        witness.row_phases[i] = RootExponent(
            candidate.move.row_phases[i].k - target.move.row_phases[i].k, r);
        witness.col_phases[i] = RootExponent(
            candidate.move.col_phases[i].k - target.move.col_phases[i].k, r);
      }
      if (!same_values(apply_equivalence(a, witness), b)) {
        throw ConstructionBug("equivalence witness does not reproduce the target");
      }
      return witness;
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return std::nullopt;
}

}  // namespace hadamard

#endif  // HADAMARD_EQUIVALENCE_HPP
