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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace hadamard;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.note << " [exception: " << e.what() << "]";
  }
  if (!o.pass) ++failures;
  std::printf("criterion %d: %s  %s (%.1f s)%s\n", n, o.pass ? "PASS" : "FAIL", title.c_str(), seconds_since(t0),
              o.note.str().c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "catalog invariants: S9 S10 S14 S15 B10 B14 have defect 0 and roots 6 5 7 30 5 7", [](Outcome& o) {
    const std::vector<std::pair<std::string, std::int64_t>> cases{{"S9", 6},  {"S10", 5}, {"S14", 7},
                                                                   {"S15", 30}, {"B10", 5}, {"B14", 7}};
    double t_float = 0;
    double t_exact = 0;
    for (const auto& [name, root] : cases) {
      const ExponentMatrix h = catalog_matrix(lookup(name));
      o.require(is_unitary(h), name + " unitary");
      o.require(butson_min_root(h).root == root, name + " root");
      auto t0 = std::chrono::steady_clock::now();
      o.require(defect(h, DefectMode::kFloat).defect == 0, name + " float defect");
      t_float += seconds_since(t0);
      t0 = std::chrono::steady_clock::now();
      o.require(defect(h, DefectMode::kExact).defect == 0, name + " exact defect");
      t_exact += seconds_since(t0);
    }
    o.note << " float " << t_float << " s, exact " << t_exact << " s";
    o.require(t_float < 10.0, "float time budget");
    o.require(t_exact < 300.0, "exact time budget");
  });

  criterion(2, "non-isolated: defect(S'10) = 8, defect(S'14) = 12", [](Outcome& o) {
    for (const auto& [name, expect] : std::vector<std::pair<std::string, std::int64_t>>{{"Sp10", 8}, {"Sp14", 12}}) {
      const ExponentMatrix h = catalog_matrix(lookup(name));
      const auto ex = defect(h, DefectMode::kExact).defect;
      const auto fl = defect(h, DefectMode::kFloat).defect;
      o.note << " " << name << "=" << ex;
      o.require(ex == expect && fl == expect, name);
    }
  });

  criterion(3, "large isolated: S25 S35 S49 S77 S91 unitary with defect 0", [](Outcome& o) {
    for (const char* name : {"S25", "S35", "S49", "S77", "S91"}) {
      const auto t0 = std::chrono::steady_clock::now();
      const ExponentMatrix h = catalog_matrix(lookup(name));
      o.require(is_unitary(h), std::string(name) + " unitary");
      o.require(butson_min_root(h).root == lookup(name).expected_root, std::string(name) + " root");
      const DefectReport r = defect(h);  // exact up to d = 49, float with gap check beyond
      o.require(r.defect == 0, std::string(name) + " defect");
      o.note << " " << name << ":" << to_string(r.mode) << "/" << r.defect << "/" << static_cast<int>(seconds_since(t0)) << "s";
    }
  });

  criterion(4, "block construction soundness on 200 random assignments", [](Outcome& o) {
    std::mt19937_64 rng(20261015);
    const std::vector<std::pair<int, int>> shapes{{2, 3}, {2, 5}, {3, 5}, {2, 7}, {3, 7}};
    int bad = 0;
    for (int t = 0; t < 200; ++t) {
      const auto [p, q] = shapes[static_cast<std::size_t>(t) % shapes.size()];
      const BlockAssignment a = testing_support::random_assignment(p, q, rng);
      const CyclotomicMatrix raw = theorem1_exact(a);
      const BlockFactors f = factor_b1_b2(a);
      const bool ok = is_unitary(raw) && is_unitary(theorem1_build(a)) && exactly_equal(f.b1.adjoint() * f.b2, raw);
      bad += ok ? 0 : 1;
    }
    o.note << " failures=" << bad;
    o.require(bad == 0, "soundness");
  });

  criterion(5, "complete MU sets for q = 2 3 5 7 11 13; tabulated diagonals for 7 11 13", [](Outcome& o) {
    for (std::int64_t q : {2, 3, 5, 7, 11, 13}) {
      const MubSet s = complete_mub_set(q);
      o.require(s.bases.size() == static_cast<std::size_t>(q + 1), "size");
      for (std::size_t a = 0; a < s.bases.size(); ++a) {
        if (!s.bases[a].identity) o.require(is_unitary(s.bases[a].matrix), "unitary");
        for (std::size_t b = a + 1; b < s.bases.size(); ++b) o.require(is_mu_pair(s.bases[a], s.bases[b]), "MU pair");
      }
    }
    for (std::int64_t q : {7, 11, 13}) {
      std::vector<std::int64_t> quadratic;
      for (std::int64_t k = 0; k < q; ++k) quadratic.push_back((k * (k - 1) / 2) % q);
      o.require(standard_diagonal(q) == quadratic, "q=" + std::to_string(q) + " diagonal");
    }
  });

  criterion(6, "Haagerup set, root and defect invariant under 100 random moves (d <= 15)", [](Outcome& o) {
    std::mt19937_64 rng(6);
    int moves = 0;
    for (const auto& name : testing_support::small_catalog(15)) {
      const ExponentMatrix h = catalog_matrix(lookup(name));
      const HaagerupSet hs = haagerup_set(h);
      const auto root = butson_min_root(h).root;
      const auto def = defect(h, DefectMode::kExact).defect;
      for (int t = 0; t < 100; ++t) {
        const ExponentMatrix m = apply_equivalence(h, testing_support::random_move(h.order(), 2 * h.root(), rng));
        o.require(haagerup_set(m) == hs, name + " Haagerup");
        o.require(butson_min_root(m).root == root, name + " root");
        o.require(defect(m, DefectMode::kExact).defect == def, name + " defect");
        ++moves;
      }
    }
    o.note << " moves=" << moves;
  });

  criterion(7, "d = 4: trivial_family(2,2,a) Hadamard with defect 1 at 50 points; a = 0 ~ F2 x F2", [](Outcome& o) {
    std::mt19937_64 rng(7);
    // Generic points: away from a = 0 and a = pi, where the defect jumps.
    std::uniform_real_distribution<double> angle(0.05, std::numbers::pi - 0.05);
    for (int t = 0; t < 50; ++t) {
      Eigen::MatrixXd a(1, 1);
      a << angle(rng) + (t % 2 ? std::numbers::pi : 0.0);
      const ComplexMatrix h = trivial_family(2, 2, a);
      o.require(is_unitary(h), "Hadamard");
      o.require(float_defect(h).defect == 1, "defect 1");
    }
    const auto zero = to_exponent(dephase(trivial_family(2, 2, Eigen::MatrixXd::Zero(1, 1))).matrix);
    o.require(zero.has_value(), "a = 0 is Butson");
    if (zero) o.require(equivalence_search_small(*zero, kron(fourier(2), fourier(2))).has_value(), "witness");
  });

  criterion(8, "screening: S9/F9, S9/F3xF3, S15/F15 inequivalent; S10/B10, S14/B14 inconclusive", [](Outcome& o) {
    const auto m = [](const char* n) { return catalog_matrix(lookup(n)); };
    o.require(inequivalent_by_invariants(m("S9"), fourier(9)).verdict == Verdict::kInequivalent, "S9 F9");
    o.require(inequivalent_by_invariants(m("S9"), kron(fourier(3), fourier(3))).verdict == Verdict::kInequivalent,
              "S9 F3xF3");
    o.require(inequivalent_by_invariants(m("S15"), fourier(15)).verdict == Verdict::kInequivalent, "S15 F15");
    o.require(inequivalent_by_invariants(m("S10"), m("B10")).verdict == Verdict::kInconclusive, "S10 B10");
    o.require(inequivalent_by_invariants(m("S14"), m("B14")).verdict == Verdict::kInconclusive, "S14 B14");
  });

  criterion(9, "search: (3,3) rediscovers S9 within 1000; (3,7) finds an isolated matrix within 10^4", [](Outcome& o) {
    const std::string target = fingerprint(haagerup_set(catalog_matrix(lookup("S9"))));
    SearchOptions opt;
    opt.budget = 1000;
    const SearchResult r9 = assignment_search(3, 3, opt);
    bool found = false;
    for (const auto& f : r9.isolated()) found = found || f.fingerprint == target;
    o.require(found, "S9 fingerprint");
    opt.budget = 10000;
    opt.deadline_seconds = 1800;
    const SearchResult r21 = assignment_search(3, 7, opt);
    o.note << " (3,3): " << r9.evaluated << " evaluated; (3,7): " << r21.evaluated << " evaluated, "
           << r21.findings.size() << " distinct, " << r21.isolated().size() << " isolated";
    o.require(!r21.isolated().empty(), "isolated d = 21");
  });

  std::printf("acceptance: %s (%d failed)\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
