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

#ifndef HADAMARD_IO_HPP
#define HADAMARD_IO_HPP

// JSON documents.
//
//   exact matrix   {"d": 9, "root": 6, "exponents": [[...], ...], "raw": true?}
//                  ("raw" marks a grid that is not dephased; readers accept either)
//   float matrix   {"d": 4, "re": [[...]], "im": [[...]]}   (entries include 1/sqrt(d))
//   assignment     {"p": 3, "q": 3, "K": ["I", "I", "H1"], "L": ["F", "F", "H2"], "M": <exact matrix>?}
//
// A K or L item is either a basis label or an exact q x q matrix.

#include <string>
#include <variant>

#include <json.hpp>

#include "hadamard/analyze.hpp"
#include "hadamard/catalog.hpp"
#include "hadamard/construct.hpp"
#include "hadamard/defect.hpp"
#include "hadamard/haagerup.hpp"
#include "hadamard/matrix.hpp"
#include "hadamard/mub.hpp"

namespace hadamard::io {

using json = nlohmann::json;
using AnyMatrix = std::variant<ExponentMatrix, ComplexMatrix>;

inline json to_json(const ExponentMatrix& h) {
  json rows = json::array();
  for (std::size_t i = 0; i < h.order(); ++i) {
    const auto r = h.row(i);
    rows.push_back(std::vector<std::int64_t>(r.begin(), r.end()));
  }
  json j = {{"d", h.order()}, {"root", h.root()}, {"exponents", rows}};
  if (!h.is_dephased()) j["raw"] = true;
  return j;
}

inline json to_json(const ComplexMatrix& h) {
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < h.order(); ++i) {
    json rr = json::array();
    json ii = json::array();
    for (std::size_t j = 0; j < h.order(); ++j) {
      rr.push_back(h(i, j).real());
      ii.push_back(h(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return {{"d", h.order()}, {"re", re}, {"im", im}};
}

inline json to_json(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return to_json(x); }, m);
}

inline ExponentMatrix exponent_matrix_from_json(const json& j) {
  try {
    const auto rows = j.at("exponents").get<std::vector<std::vector<std::int64_t>>>();
    const ExponentMatrix h = ExponentMatrix::from_rows(j.at("root").get<std::int64_t>(), rows);
    if (j.contains("d") && j["d"].get<std::size_t>() != h.order()) throw ParseError("\"d\" does not match the grid");
    return h;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("exact matrix: ") + ex.what());
  } catch (const DimensionMismatchError& ex) {
    throw ParseError(ex.what());
  } catch (const InvalidArgumentError& ex) {
    throw ParseError(ex.what());
  }
}

inline ComplexMatrix complex_matrix_from_json(const json& j) {
  try {
    const auto re = j.at("re").get<std::vector<std::vector<double>>>();
    const auto im = j.at("im").get<std::vector<std::vector<double>>>();
    const auto d = static_cast<Eigen::Index>(re.size());
    if (static_cast<Eigen::Index>(im.size()) != d) throw ParseError("re and im differ in shape");
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      const auto& rr = re[static_cast<std::size_t>(i)];
      const auto& ii = im[static_cast<std::size_t>(i)];
      if (static_cast<Eigen::Index>(rr.size()) != d || static_cast<Eigen::Index>(ii.size()) != d) {
        throw ParseError("float matrix is not square");
      }
      for (Eigen::Index k = 0; k < d; ++k) m(i, k) = {rr[static_cast<std::size_t>(k)], ii[static_cast<std::size_t>(k)]};
    }
    return ComplexMatrix(std::move(m));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("float matrix: ") + ex.what());
  }
}

inline AnyMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix document must be an object");
  if (j.contains("exponents")) return exponent_matrix_from_json(j);
  if (j.contains("re")) return complex_matrix_from_json(j);
  throw ParseError("matrix document needs \"exponents\" or \"re\"/\"im\"");
}

inline json to_json(const Basis& b) {
  json j = {{"label", b.label}, {"identity", b.identity}, {"d", b.matrix.order()}};
  if (!b.identity) {
    const json m = to_json(b.matrix);
    j["root"] = m["root"];
    j["exponents"] = m["exponents"];
  }
  return j;
}

inline json to_json(const MubSet& s) {
  json bases = json::array();
  for (const auto& b : s.bases) bases.push_back(to_json(b));
  return {{"q", s.q}, {"variant", s.variant}, {"derived", s.derived}, {"bases", bases}};
}

namespace detail {
inline std::vector<Basis> parse_side(const json& side, const MubSet& set, const std::string& tag) {
  std::vector<Basis> out;
  if (!side.is_array()) throw ParseError("\"" + tag + "\" must be an array");
  for (std::size_t i = 0; i < side.size(); ++i) {
    const auto& item = side[i];
    if (item.is_string()) {
      out.push_back(set.find(item.get<std::string>()));
    } else {
      out.push_back(Basis{tag + "[" + std::to_string(i) + "]", false, exponent_matrix_from_json(item)});
    }
  }
  return out;
}
}  // namespace detail

inline BlockAssignment assignment_from_json(const json& j) {
  try {
    BlockAssignment a;
    a.p = j.at("p").get<std::int64_t>();
    a.q = j.at("q").get<std::int64_t>();
    if (a.p < 1 || a.q < 2) throw ParseError("need p >= 1 and q >= 2");
    const MubSet set = complete_mub_set(a.q);
    a.k = detail::parse_side(j.at("K"), set, "K");
    a.l = detail::parse_side(j.at("L"), set, "L");
    if (j.contains("M")) {
      a.m = exponent_matrix_from_json(j["M"]);
      a.canonical_m = false;
    } else {
      a.m = fourier(static_cast<std::size_t>(a.p));
    }
    return a;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("assignment: ") + ex.what());
  } catch (const InvalidArgumentError& ex) {
    throw ParseError(std::string("assignment: ") + ex.what());
  }
}

inline json to_json(const BlockAssignment& a) {
  auto side = [](const std::vector<Basis>& bs) {
    json out = json::array();
    for (const auto& b : bs) out.push_back(b.label);
    return out;
  };
  json j = {{"p", a.p}, {"q", a.q}, {"K", side(a.k)}, {"L", side(a.l)}};
  if (!a.canonical_m) j["M"] = to_json(a.m);
  return j;
}

inline json to_json(const DefectReport& r) {
  json j = {{"defect", r.defect},   {"variables", r.variables}, {"rank", r.rank},
            {"mode", to_string(r.mode)}, {"rows", r.rows},      {"isolated", r.isolated()}};
  if (r.mode == DefectMode::kExact) {
    j["evidence"] = {{"primes", r.primes}, {"pivots", r.pivots}};
  } else {
    j["evidence"] = {{"cut", r.cut}, {"kept_near_gap", r.kept_near_gap}, {"dropped_near_gap", r.dropped_near_gap}};
  }
  return j;
}

inline json to_json(const HaagerupSet& s) {
  return {{"root", s.root},
          {"size", s.size()},
          {"exponents", s.exponents},
          {"canonical", canonical_string(s)},
          {"fingerprint", fingerprint(s)}};
}

inline json to_json(const HaagerupAngles& s) { return {{"size", s.angles.size()}, {"angles", s.angles}}; }

inline json to_json(const ComparisonReport& r) { return {{"verdict", to_string(r.verdict)}, {"reasons", r.reasons}}; }

inline json to_json(const SearchResult& r) {
  json findings = json::array();
  for (const auto& f : r.findings) {
    findings.push_back({{"index", f.index},
                        {"K", f.labels.k},
                        {"L", f.labels.l},
                        {"root", f.root},
                        {"defect", to_json(f.report)},
                        {"fingerprint", f.fingerprint},
                        {"duplicates", f.duplicates}});
  }
  std::size_t isolated = 0;
  for (const auto& f : r.findings) isolated += f.report.defect == 0 ? 1 : 0;
  return {{"p", r.p},
          {"q", r.q},
          {"candidates", r.candidates},
          {"evaluated", r.evaluated},
          {"failures", r.failures},
          {"partial", r.partial},
          {"stop_reason", r.stop_reason},
          {"distinct", r.findings.size()},
          {"isolated", isolated},
          {"findings", findings}};
}

inline json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"check", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  json j = {{"name", r.name}, {"passed", r.passed()}, {"checks", checks}};
  if (r.root) j["root"] = *r.root;
  if (r.defect) j["defect"] = r.defect->defect;
  return j;
}

inline json to_json(const CatalogEntry& e) {
  json j = {{"name", e.name}, {"display", e.display}, {"d", e.d}, {"expected_root", e.expected_root}};
  if (e.expected_defect) j["expected_defect"] = *e.expected_defect;
  if (e.recipe) j["recipe"] = {{"p", e.recipe->p}, {"q", e.recipe->q}, {"K", e.recipe->k}, {"L", e.recipe->l}};
  j["has_literal"] = e.literal.has_value();
  j["provenance"] = e.provenance;
  if (!e.notes.empty()) j["notes"] = e.notes;
  return j;
}

}  // namespace hadamard::io

#endif  // HADAMARD_IO_HPP
