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

#ifndef HADAMARD_CLI_HPP
#define HADAMARD_CLI_HPP

// Batch front end. Exit codes: 0 ok, 1 a check failed, 2 malformed input,
// 3 indeterminate float rank.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hadamard/analyze.hpp"
#include "hadamard/catalog.hpp"
#include "hadamard/construct.hpp"
#include "hadamard/defect.hpp"
#include "hadamard/haagerup.hpp"
#include "hadamard/io.hpp"
#include "hadamard/mub.hpp"
#include "hadamard/parallel.hpp"

namespace hadamard::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kMalformed = 2, kIndeterminate = 3 };

namespace detail {
using io::json;

inline json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(path + ": " + ex.what());
  }
}

inline io::AnyMatrix read_matrix(const std::string& path) { return io::matrix_from_json(read_json(path)); }

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline DefectMode mode_from_flags(bool exact, bool fl) {
  if (exact && fl) throw ParseError("--exact and --float are mutually exclusive");
  if (exact) return DefectMode::kExact;
  if (fl) return DefectMode::kFloat;
  return DefectMode::kAuto;
}

inline void print_table(std::ostream& out, const std::vector<VerifyReport>& reps) {
  for (const auto& r : reps) {
    out << r.name << (r.passed() ? "  PASS" : "  FAIL") << "\n";
    for (const auto& c : r.checks) {
      out << "  " << std::left << std::setw(6) << to_string(c.status) << std::setw(34) << c.name << c.detail << "\n";
    }
  }
}
}  // namespace detail

/// Runs one command. Output documents go to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using detail::json;
  CLI::App app{"Block-built complex Hadamard matrices: construction, invariants, catalog"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string path;
  std::string path_b;
  std::string assignment_path;
  std::string catalog_name;
  std::string verify_name;
  bool exact = false;
  bool use_float = false;
  bool table = false;
  bool formula = false;
  std::int64_t q = 0;
  std::int64_t p = 0;
  std::size_t budget = 10000;
  double deadline = 0.0;
  unsigned threads = 0;

  auto* gen = app.add_subcommand("gen", "Build the block matrix of an assignment (dephased, minimal root)");
  auto* gen_src = gen->add_option_group("source");
  gen_src->add_option("--assignment", assignment_path, "assignment JSON");
  gen_src->add_option("--catalog", catalog_name, "catalog entry name");
  gen_src->require_option(1);
  gen->add_flag("--float", use_float, "float build, complex output");

  auto* deph = app.add_subcommand("dephase", "Dephase a matrix");
  deph->add_option("matrix", path, "matrix JSON ('-' for stdin)")->required();

  auto* unit = app.add_subcommand("unitary", "Check unitarity (exact for exponent input)");
  unit->add_option("matrix", path)->required();

  auto* butson = app.add_subcommand("butson", "Print the minimal Butson root");
  butson->add_option("matrix", path)->required();

  auto* haag = app.add_subcommand("haagerup", "Haagerup set and fingerprint");
  haag->add_option("matrix", path)->required();

  auto* def = app.add_subcommand("defect", "Defect report");
  def->add_option("matrix", path)->required();
  def->add_flag("--exact", exact, "exact modular rank");
  def->add_flag("--float", use_float, "singular values with gap check");

  auto* mub = app.add_subcommand("mub", "Complete MU set for a prime q");
  mub->add_option("--q", q)->required();
  mub->add_flag("--formula", formula, "use the quadratic k(k-1)/2 diagonal for every q");

  auto* cat = app.add_subcommand("catalog", "Catalog of named matrices");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "List entries");
  auto* ver = cat->add_subcommand("verify", "Rebuild and check entries");
  ver->add_option("--name", verify_name, "single entry");
  ver->add_flag("--table", table, "human-readable table instead of JSON");
  ver->add_flag("--exact", exact);
  ver->add_flag("--float", use_float);

  auto* search = app.add_subcommand("search", "Enumerate canonical assignments");
  search->add_option("--p", p)->required();
  search->add_option("--q", q)->required();
  search->add_option("--budget", budget, "max assignments evaluated");
  search->add_option("--deadline", deadline, "seconds; 0 for none");
  search->add_option("--threads", threads, "workers; defaults to HF_THREADS or hardware");

  auto* cmp = app.add_subcommand("compare", "Screen two matrices for inequivalence");
  cmp->add_option("a", path)->required();
  cmp->add_option("b", path_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }

  try {
    if (gen->parsed()) {
      BlockAssignment a;
      if (!catalog_name.empty()) {
        const auto& e = lookup(catalog_name);
        if (!e.recipe) {
          if (use_float) throw ParseError(e.name + " has no recipe");
          detail::emit(out, io::to_json(butson_min_root(*e.literal).matrix));
          return kOk;
        }
        a = assignment(*e.recipe);
      } else {
        a = io::assignment_from_json(detail::read_json(assignment_path));
      }
      if (use_float) {
        detail::emit(out, io::to_json(theorem1_build(to_complex(a))));
      } else {
        detail::emit(out, io::to_json(theorem1_build(a)));
      }
      return kOk;
    }
    if (deph->parsed()) {
      const auto m = detail::read_matrix(path);
      if (const auto* e = std::get_if<ExponentMatrix>(&m)) {
        detail::emit(out, io::to_json(dephase(*e).matrix));
      } else {
        detail::emit(out, io::to_json(dephase(std::get<ComplexMatrix>(m)).matrix));
      }
      return kOk;
    }
    if (unit->parsed()) {
      const auto m = detail::read_matrix(path);
      json j;
      bool ok = false;
      if (const auto* e = std::get_if<ExponentMatrix>(&m)) {
        ok = is_unitary(*e);
        j = {{"unitary", ok}, {"mode", "exact"}};
      } else {
        const auto& c = std::get<ComplexMatrix>(m);
        ok = is_unitary(c);
        j = {{"unitary", ok}, {"mode", "float"}, {"error", unitarity_error(c)}};
      }
      detail::emit(out, j);
      return ok ? kOk : kCheckFailed;
    }
    if (butson->parsed()) {
      const auto m = detail::read_matrix(path);
      std::optional<ExponentMatrix> e;
      if (const auto* x = std::get_if<ExponentMatrix>(&m)) {
        e = *x;
      } else {
        e = to_exponent(dephase(std::get<ComplexMatrix>(m)).matrix);
      }
      if (!e) {
        err << "not of Butson type (no root order up to 1024 fits)\n";
        return kCheckFailed;
      }
      out << butson_min_root(*e).root << "\n";
      return kOk;
    }
    if (haag->parsed()) {
      const auto m = detail::read_matrix(path);
      if (const auto* e = std::get_if<ExponentMatrix>(&m)) {
        detail::emit(out, io::to_json(haagerup_set(*e)));
      } else {
        const auto& c = std::get<ComplexMatrix>(m);
        if (auto x = to_exponent(dephase(c).matrix)) {
          detail::emit(out, io::to_json(haagerup_set(*x)));
        } else {
          detail::emit(out, io::to_json(haagerup_set(c)));
        }
      }
      return kOk;
    }
    if (def->parsed()) {
      const DefectMode mode = detail::mode_from_flags(exact, use_float);
      const auto m = detail::read_matrix(path);
      DefectReport r;
      if (const auto* e = std::get_if<ExponentMatrix>(&m)) {
        r = defect(*e, mode);
      } else {
        r = defect(std::get<ComplexMatrix>(m), mode == DefectMode::kAuto ? DefectMode::kFloat : mode);
      }
      detail::emit(out, io::to_json(r));
      return kOk;
    }
    if (mub->parsed()) {
      detail::emit(out, io::to_json(complete_mub_set(q, formula ? MubVariant::kFormula : MubVariant::kStandard)));
      return kOk;
    }
    if (cat->parsed()) {
      if (cat->got_subcommand("list")) {
        json list = json::array();
        for (const auto& e : catalog()) list.push_back(io::to_json(e));
        detail::emit(out, list);
        return kOk;
      }
      const DefectMode mode = detail::mode_from_flags(exact, use_float);
      std::vector<const CatalogEntry*> entries;
      if (!verify_name.empty()) {
        entries.push_back(&lookup(verify_name));
      } else {
        for (const auto& e : catalog()) entries.push_back(&e);
      }
      std::vector<VerifyReport> reps(entries.size());
      parallel_for(entries.size(), worker_count(), [&](std::size_t i) {
        reps[i] = verify(*entries[i], mode);
        return true;
      });
      bool all = true;
      json arr = json::array();
      for (const auto& r : reps) {
        all = all && r.passed();
        arr.push_back(io::to_json(r));
      }
      if (table) {
        detail::print_table(out, reps);
      } else {
        detail::emit(out, {{"passed", all}, {"entries", arr}});
      }
      return all ? kOk : kCheckFailed;
    }
    if (search->parsed()) {
      SearchOptions opt;
      opt.budget = budget;
      opt.deadline_seconds = deadline;
      opt.threads = threads;
      detail::emit(out, io::to_json(assignment_search(p, q, opt)));
      return kOk;
    }
    if (cmp->parsed()) {
      const auto a = detail::read_matrix(path);
      const auto b = detail::read_matrix(path_b);
      ComparisonReport r;
      const auto* ea = std::get_if<ExponentMatrix>(&a);
      const auto* eb = std::get_if<ExponentMatrix>(&b);
      if (ea && eb) {
        r = inequivalent_by_invariants(*ea, *eb);
      } else {
        auto as_complex = [](const io::AnyMatrix& x) {
          if (const auto* e = std::get_if<ExponentMatrix>(&x)) return to_complex(*e);
          return std::get<ComplexMatrix>(x);
        };
        r = inequivalent_by_invariants(as_complex(a), as_complex(b));
      }
      detail::emit(out, io::to_json(r));
      return kOk;
    }
  } catch (const IndeterminateRankError& e) {
    err << "indeterminate: " << e.what() << "\n";
    return kIndeterminate;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}

}  // namespace hadamard::cli

#endif  // HADAMARD_CLI_HPP
