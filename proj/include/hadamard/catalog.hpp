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

#ifndef HADAMARD_CATALOG_HPP
#define HADAMARD_CATALOG_HPP

// Named matrices with their expected invariants. Entries come from the JSON
// files under data/catalog, compiled in at configure time.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hadamard/construct.hpp"
#include "hadamard/defect.hpp"
#include "hadamard/equivalence.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/fixtures_data.hpp"
#include "hadamard/matrix.hpp"

namespace hadamard {

struct Recipe {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<std::string> k;
  std::vector<std::string> l;
};

struct Correction {
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t printed = 0;
  std::int64_t corrected = 0;
};

struct CatalogEntry {
  std::string name;
  std::string display;
  std::size_t d = 0;
  std::optional<Recipe> recipe;
  std::optional<ExponentMatrix> literal;
  // "equal": recipe output and literal agree entrywise once dephased;
  // "equivalent": they are related by an equivalence move.
  std::string literal_relation = "equal";
  std::int64_t expected_root = 0;
  std::optional<std::int64_t> expected_defect;
  std::map<std::string, std::string> provenance;
  std::vector<std::string> notes;
  std::vector<Correction> corrections;

  /// The literal with the printed (uncorrected) entries put back.
  std::optional<ExponentMatrix> printed_literal() const {
    if (!literal || corrections.empty()) return literal;
    std::vector<std::int64_t> e = literal->exponents();
    for (const auto& c : corrections) e[c.row * d + c.col] = c.printed;
    return ExponentMatrix(d, literal->root(), std::move(e));
  }
};

namespace detail {
inline ExponentMatrix parse_grid(const nlohmann::json& j) {
  const std::int64_t r = j.at("root").get<std::int64_t>();
  const auto rows = j.at("exponents").get<std::vector<std::vector<std::int64_t>>>();
  return ExponentMatrix::from_rows(r, rows);
}

inline CatalogEntry parse_entry(const nlohmann::json& j) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.display = j.value("display", e.name);
  e.d = j.at("d").get<std::size_t>();
  if (j.contains("recipe")) {
    const auto& r = j["recipe"];
    e.recipe = Recipe{r.at("p").get<std::int64_t>(), r.at("q").get<std::int64_t>(),
                      r.at("K").get<std::vector<std::string>>(), r.at("L").get<std::vector<std::string>>()};
  }
  if (j.contains("literal")) e.literal = parse_grid(j["literal"]);
  e.literal_relation = j.value("literal_relation", "equal");
  e.expected_root = j.at("expected").at("root").get<std::int64_t>();
  if (j["expected"].contains("defect")) e.expected_defect = j["expected"]["defect"].get<std::int64_t>();
  if (j.contains("provenance")) e.provenance = j["provenance"].get<std::map<std::string, std::string>>();
  if (j.contains("notes")) e.notes = j["notes"].get<std::vector<std::string>>();
  if (j.contains("corrections")) {
    for (const auto& c : j["corrections"]) {
      e.corrections.push_back({c.at("row").get<std::size_t>(), c.at("col").get<std::size_t>(),
                               c.at("printed").get<std::int64_t>(), c.at("corrected").get<std::int64_t>()});
    }
  }
  return e;
}

inline std::vector<CatalogEntry> load_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& f : fixtures::kFixtures) {
    try {
      out.push_back(parse_entry(nlohmann::json::parse(f.json)));
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError("catalog fixture " + std::string(f.name) + ": " + ex.what());
    }
  }
  // Natural order: by order d, then name.
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.d != b.d ? a.d < b.d : a.name < b.name;
  });
  return out;
}
}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::load_catalog();
  return entries;
}

/// Accepts the stored name, the display name, and "S'" / "S′" spellings of "Sp".
inline const CatalogEntry& lookup(std::string name) {
  for (const std::string prime : {"S'", "S′"}) {
    if (name.rfind(prime, 0) == 0) name = "Sp" + name.substr(prime.size());
  }
  for (const auto& e : catalog()) {
    if (e.name == name || e.display == name) return e;
  }
  throw ParseError("no catalog entry named '" + name + "'");
}

inline BlockAssignment assignment(const Recipe& r) { return make_assignment(r.p, r.q, r.k, r.l); }

/// Recipe output if the entry has a recipe, else the dephased literal; both
/// at minimal root.
inline ExponentMatrix catalog_matrix(const CatalogEntry& e) {
  if (e.recipe) return theorem1_build(assignment(*e.recipe));
  return butson_min_root(*e.literal).matrix;
}

enum class CheckStatus { kPass, kFail, kFlag };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    default: return "flag";
  }
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct VerifyReport {
  std::string name;
  std::optional<std::int64_t> root;
  std::optional<DefectReport> defect;
  std::vector<Check> checks;

  /// Flags do not count as failures.
  bool passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::kFail) return false;
    return !checks.empty();
  }
};

/// Rebuilds the entry and checks unitarity, minimal root, defect and
/// agreement between recipe and literal. A minimal root that is a proper
/// divisor of the expected one is flagged rather than failed.
inline VerifyReport verify(const CatalogEntry& e, DefectMode mode = DefectMode::kAuto) {
  VerifyReport rep;
  rep.name = e.name;
  auto add = [&](std::string n, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(n), ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(detail)});
  };
  std::optional<ExponentMatrix> h;
  if (e.recipe) {
    try {
      h = theorem1_build(assignment(*e.recipe));
      add("recipe builds", true, "p=" + std::to_string(e.recipe->p) + " q=" + std::to_string(e.recipe->q));
    } catch (const Error& ex) {
      add("recipe builds", false, ex.what());
    }
  }
  if (e.literal) {
    add("literal unitary", is_unitary(*e.literal));
    if (!h) h = butson_min_root(*e.literal).matrix;
  }
  if (!h) return rep;
  add("order", h->order() == e.d, "d=" + std::to_string(h->order()));
  add("exact unitarity", is_unitary(*h));
  const std::int64_t root = butson_min_root(*h).root;
  rep.root = root;
  if (root == e.expected_root) {
    add("minimal root", true, std::to_string(root));
  } else if (e.expected_root % root == 0) {
    rep.checks.push_back({"minimal root", CheckStatus::kFlag,
                          std::to_string(root) + " is a proper divisor of the expected " +
                              std::to_string(e.expected_root)});
  } else {
    add("minimal root", false, std::to_string(root) + " != expected " + std::to_string(e.expected_root));
  }
  if (e.expected_defect) {
    try {
      rep.defect = defect(*h, mode);
      add("defect", rep.defect->defect == *e.expected_defect,
          std::to_string(rep.defect->defect) + " (" + to_string(rep.defect->mode) + ")");
    } catch (const IndeterminateRankError& ex) {
      add("defect", false, ex.what());
    }
  }
  if (e.recipe && e.literal) {
    const ExponentMatrix lit = butson_min_root(*e.literal).matrix;
    if (e.literal_relation == "equivalent") {
      const bool found = e.d <= kMaxBruteForceOrder && equivalence_search_small(*h, lit).has_value();
      add("recipe equivalent to literal", found);
    } else {
      add("recipe equals literal", same_values(*h, lit));
    }
  }
  if (const auto printed = e.printed_literal(); printed && !e.corrections.empty()) {
    add("printed entries fail unitarity", !is_unitary(*printed),
        std::to_string(e.corrections.size()) + " corrected entries");
  }
  return rep;
}

inline VerifyReport verify(const std::string& name, DefectMode mode = DefectMode::kAuto) {
  return verify(lookup(name), mode);
}

}  // namespace hadamard

#endif  // HADAMARD_CATALOG_HPP
