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

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace hadamard;

TEST_CASE("complete MU sets are pairwise unbiased", "[mub]") {
  for (std::int64_t q : {2, 3, 5, 7, 11, 13}) {
    const MubSet s = complete_mub_set(q);
    REQUIRE(s.bases.size() == static_cast<std::size_t>(q + 1));
    for (std::size_t a = 0; a < s.bases.size(); ++a) {
      if (!s.bases[a].identity) CHECK(is_unitary(s.bases[a].matrix));
      for (std::size_t b = a + 1; b < s.bases.size(); ++b) {
        CHECK(is_mu_pair(s.bases[a], s.bases[b]));
        // Float oracle.
        CHECK(is_mu_pair(ComplexMatrix(basis_to_complex(s.bases[a])), ComplexMatrix(basis_to_complex(s.bases[b]))));
      }
      if (!s.bases[a].identity) CHECK_FALSE(is_mu_pair(s.bases[a], s.bases[a]));
    }
  }
}

TEST_CASE("diagonals for q = 7, 11, 13 are the printed ones", "[mub]") {
  CHECK(standard_diagonal(7) == std::vector<std::int64_t>{0, 0, 1, 3, 6, 3, 1});
  CHECK(standard_diagonal(11) == std::vector<std::int64_t>{0, 0, 1, 3, 6, 10, 4, 10, 6, 3, 1});
  CHECK(standard_diagonal(13) == std::vector<std::int64_t>{0, 0, 1, 3, 6, 10, 2, 8, 2, 10, 6, 3, 1});
  // Independent check: they follow k(k-1)/2 mod q.
  for (std::int64_t q : {7, 11, 13, 17, 19}) {
    const auto d = standard_diagonal(q);
    for (std::int64_t k = 0; k < q; ++k) CHECK(d[static_cast<std::size_t>(k)] == (k * (k - 1) / 2) % q);
  }
}

TEST_CASE("q = 3 bases carry the Hy and Hw aliases", "[mub]") {
  const MubSet s = complete_mub_set(3);
  CHECK(s.find("Hy").label == "H1");
  CHECK(s.find("Hw").label == "H2");
  // H_y = diag(1, w, w) F_3.
  const ExponentMatrix hy = s.find("Hy").matrix;
  CHECK(hy == ExponentMatrix::from_rows(3, {{0, 0, 0}, {1, 2, 0}, {1, 0, 2}}));
  CHECK_THROWS_AS(s.find("H3"), ParseError);
}

TEST_CASE("formula variant is also complete", "[mub]") {
  for (std::int64_t q : {3, 5, 7}) {
    const MubSet s = complete_mub_set(q, MubVariant::kFormula);
    CHECK(s.variant == "formula");
    CHECK(s.bases.size() == static_cast<std::size_t>(q + 1));
  }
  CHECK(complete_mub_set(5, MubVariant::kFormula).derived);
  CHECK(complete_mub_set(2).derived);
}

TEST_CASE("non-prime dimensions are refused", "[mub]") {
  CHECK_THROWS_AS(complete_mub_set(6), InvalidArgumentError);
  CHECK_THROWS_AS(standard_diagonal(9), InvalidArgumentError);
  CHECK_THROWS_AS(standard_diagonal(2), InvalidArgumentError);
  CHECK_THROWS_AS(fourier(0), InvalidArgumentError);
}

TEST_CASE("MU test detects a mutated basis", "[mub]") {
  const MubSet s = complete_mub_set(5);
  std::vector<std::int64_t> e = s.find("H1").matrix.exponents();
  e[7] = (e[7] + 2) % 5;
  const ExponentMatrix bad(5, 5, e);
  CHECK_FALSE(is_mu_pair(bad, s.find("F").matrix));
}
