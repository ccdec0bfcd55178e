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

#include <random>

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace hadamard;

TEST_CASE("d = 4 family member at zero is equivalent to F2 x F2", "[equivalence]") {
  const ComplexMatrix t = trivial_family(2, 2, Eigen::MatrixXd::Zero(1, 1));
  const auto e = to_exponent(dephase(t).matrix);
  REQUIRE(e.has_value());
  const ExponentMatrix ff = kron(fourier(2), fourier(2));
  const auto w = equivalence_search_small(*e, ff);
  REQUIRE(w.has_value());
  CHECK(same_values(apply_equivalence(*e, *w), ff));
}

TEST_CASE("random moves are undone by the search", "[equivalence]") {
  std::mt19937_64 rng(21);
  const ExponentMatrix s6 = theorem1_build(make_assignment(2, 3, {"I", "Hy"}, {"F", "Hw"}));
  for (int t = 0; t < 5; ++t) {
    const ExponentMatrix moved = apply_equivalence(s6, testing_support::random_move(6, 3, rng));
    const auto w = equivalence_search_small(s6, moved);
    REQUIRE(w.has_value());
    CHECK(same_values(apply_equivalence(s6, *w), moved));
  }
}

TEST_CASE("matrices with different invariants are not matched", "[equivalence]") {
  const ExponentMatrix s6 = theorem1_build(make_assignment(2, 3, {"I", "Hy"}, {"F", "Hw"}));
  CHECK_FALSE(equivalence_search_small(s6, fourier(6)).has_value());
  // F4 and F2 x F2 differ in minimal root.
  CHECK_FALSE(equivalence_search_small(fourier(4), kron(fourier(2), fourier(2)).lifted(4)).has_value());
  CHECK_THROWS_AS(equivalence_search_small(fourier(7), fourier(7)), SearchSpaceError);
}
