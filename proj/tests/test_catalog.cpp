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

TEST_CASE("catalog holds the required entries", "[catalog]") {
  for (const char* name : {"S6", "S9", "S10", "Sp10", "S14", "Sp14", "S15", "S25", "S35", "S49", "S77", "S91", "B10", "B14"}) {
    INFO(name);
    CHECK_NOTHROW(lookup(name));
  }
  CHECK(lookup("S'10").name == "Sp10");
  CHECK(lookup("S′14").name == "Sp14");
  CHECK_THROWS_AS(lookup("S11"), ParseError);
  CHECK(lookup("B14").literal->order() == 14);
  CHECK(lookup("B14").literal->root() == 7);
  CHECK_FALSE(lookup("B10").recipe.has_value());
}

TEST_CASE("catalog entries up to order 35 verify", "[catalog]") {
  for (const auto& name : testing_support::small_catalog(35)) {
    const VerifyReport r = verify(name);
    INFO(name);
    for (const auto& c : r.checks) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.status == CheckStatus::kPass);
    }
    CHECK(r.passed());
    REQUIRE(r.root.has_value());
    CHECK(*r.root == lookup(name).expected_root);
  }
}

TEST_CASE("S6 matches the reference BH(6,3) grid up to equivalence", "[catalog]") {
  const auto& e = lookup("S6");
  CHECK(e.literal_relation == "equivalent");
  REQUIRE(e.literal.has_value());
  CHECK(is_unitary(*e.literal));
  CHECK(equivalence_search_small(catalog_matrix(e), *e.literal).has_value());
}

TEST_CASE("S15 printed entries break unitarity", "[catalog]") {
  const auto& e = lookup("S15");
  REQUIRE(e.corrections.size() == 2);
  CHECK(is_unitary(*e.literal));
  CHECK_FALSE(is_unitary(*e.printed_literal()));
  CHECK(unitarity_error(to_complex(*e.printed_literal())) > 0.1);
}

TEST_CASE("any single-entry change to a literal breaks unitarity", "[catalog]") {
  for (const auto& e : catalog()) {
    if (!e.literal) continue;
    const ExponentMatrix& lit = *e.literal;
    const std::size_t d = lit.order();
    INFO(e.name);
    for (std::size_t idx = 0; idx < d * d; ++idx) {
      std::vector<std::int64_t> x = lit.exponents();
      x[idx] += 1;
      CHECK_FALSE(is_unitary(ExponentMatrix(d, lit.root(), x)));
    }
  }
}

TEST_CASE("minimal root below the expected one is flagged, not failed", "[catalog]") {
  CatalogEntry e = lookup("S10");
  e.expected_root = 10;
  e.recipe.reset();
  const VerifyReport r = verify(e);
  bool flagged = false;
  for (const auto& c : r.checks) flagged = flagged || (c.name == "minimal root" && c.status == CheckStatus::kFlag);
  CHECK(flagged);
  CHECK(r.passed());
  e.expected_root = 7;
  CHECK_FALSE(verify(e).passed());
}
