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

#ifndef HADAMARD_ANALYZE_HPP
#define HADAMARD_ANALYZE_HPP

// Invariant screening and the assignment search.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hadamard/construct.hpp"
#include "hadamard/defect.hpp"
#include "hadamard/haagerup.hpp"
#include "hadamard/matrix.hpp"
#include "hadamard/mub.hpp"
#include "hadamard/parallel.hpp"

namespace hadamard {

enum class Verdict { kInequivalent, kInconclusive };

inline std::string to_string(Verdict v) { return v == Verdict::kInequivalent ? "inequivalent" : "inconclusive"; }

struct ComparisonReport {
  Verdict verdict = Verdict::kInconclusive;
  std::vector<std::string> reasons;  // one line per invariant that differs
};

/// Compares Haagerup sets, minimal Butson roots and defects. Never reports
/// equivalence; matching invariants only give "inconclusive".
inline ComparisonReport inequivalent_by_invariants(const ExponentMatrix& a, const ExponentMatrix& b,
                                                   DefectMode mode = DefectMode::kAuto) {
  if (a.order() != b.order()) throw DimensionMismatchError("matrices have different orders");
  ComparisonReport rep;
  const auto ra = butson_min_root(a).root;
  const auto rb = butson_min_root(b).root;
  if (ra != rb) rep.reasons.push_back("minimal roots differ: " + std::to_string(ra) + " vs " + std::to_string(rb));
  const auto ha = haagerup_set(a);
  const auto hb = haagerup_set(b);
  if (ha != hb) {
    rep.reasons.push_back("Haagerup sets differ: " + std::to_string(ha.size()) + " elements over root " +
                          std::to_string(ha.root) + " vs " + std::to_string(hb.size()) + " over root " +
                          std::to_string(hb.root));
  }
  const auto da = defect(a, mode).defect;
  const auto db = defect(b, mode).defect;
  if (da != db) rep.reasons.push_back("defects differ: " + std::to_string(da) + " vs " + std::to_string(db));
  rep.verdict = rep.reasons.empty() ? Verdict::kInconclusive : Verdict::kInequivalent;
  return rep;
}

/// Float inputs are compared exactly when both are Butson; otherwise with
/// float Haagerup angles and float defect.
inline ComparisonReport inequivalent_by_invariants(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.order() != b.order()) throw DimensionMismatchError("matrices have different orders");
  const auto ea = to_exponent(dephase(a).matrix);
  const auto eb = to_exponent(dephase(b).matrix);
  if (ea && eb) return inequivalent_by_invariants(*ea, *eb);
  ComparisonReport rep;
  if (ea.has_value() != eb.has_value()) rep.reasons.push_back("only one matrix is of Butson type");
  if (!haagerup_set(a).approx_equal(haagerup_set(b))) rep.reasons.push_back("Haagerup sets differ");
  const auto da = float_defect(a).defect;
  const auto db = float_defect(b).defect;
  if (da != db) rep.reasons.push_back("defects differ: " + std::to_string(da) + " vs " + std::to_string(db));
  rep.verdict = rep.reasons.empty() ? Verdict::kInconclusive : Verdict::kInequivalent;
  return rep;
}

struct AssignmentLabels {
  std::vector<std::string> k;
  std::vector<std::string> l;
  friend auto operator<=>(const AssignmentLabels&, const AssignmentLabels&) = default;
};

namespace detail {
inline void multisets(std::size_t len, std::size_t alphabet, std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (std::size_t x = cur.empty() ? 0 : cur.back(); x < alphabet; ++x) {
    cur.push_back(x);
    multisets(len, alphabet, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// Canonical assignments with K_0 = I and L_0 = F. The remaining K entries
/// form a sorted multiset over {I, H_1..H_{q-1}}, the L entries one over
/// {F, H_1..H_{q-1}}, and no H_j appears on both sides. Lexicographic order.
inline std::vector<AssignmentLabels> canonical_assignments(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 2) throw InvalidArgumentError("search needs p >= 1 and q >= 2");
  const auto len = static_cast<std::size_t>(p - 1);
  const auto alphabet = static_cast<std::size_t>(q);
  std::vector<std::vector<std::size_t>> sides;
  std::vector<std::size_t> cur;
  detail::multisets(len, alphabet, cur, sides);
  auto name = [](std::size_t x, const char* zero) { return x == 0 ? std::string(zero) : "H" + std::to_string(x); };
  std::vector<AssignmentLabels> out;
  for (const auto& ks : sides) {
    for (const auto& ls : sides) {
      bool clash = false;
      for (std::size_t x : ks)
        for (std::size_t y : ls) clash = clash || (x != 0 && x == y);
      if (clash) continue;
      AssignmentLabels a{{"I"}, {"F"}};
      for (std::size_t x : ks) a.k.push_back(name(x, "I"));
      for (std::size_t y : ls) a.l.push_back(name(y, "F"));
      out.push_back(std::move(a));
    }
  }
  return out;
}

struct SearchOptions {
  std::size_t budget = 10000;        // max assignments evaluated
  double deadline_seconds = 0.0;     // 0 means none
  unsigned threads = 0;              // 0 means worker_count()
  DefectMode mode = DefectMode::kAuto;
};

struct SearchFinding {
  std::size_t index = 0;  // position in canonical order
  AssignmentLabels labels;
  std::int64_t root = 0;
  DefectReport report;
  std::string fingerprint;
  std::size_t duplicates = 0;  // later assignments with the same (fingerprint, defect)
};

struct SearchResult {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::size_t candidates = 0;
  std::size_t evaluated = 0;
  std::size_t failures = 0;  // builds or rank computations that raised
  bool partial = false;
  std::string stop_reason;  // "", "budget" or "deadline"
  std::vector<SearchFinding> findings;

  std::vector<SearchFinding> isolated() const {
    std::vector<SearchFinding> out;
    for (const auto& f : findings)
      if (f.report.defect == 0) out.push_back(f);
    return out;
  }
};

/// Evaluates canonical assignments in order, deduplicating by (Haagerup
/// fingerprint, defect). Findings are listed in canonical order whatever the
/// worker scheduling.
inline SearchResult assignment_search(std::int64_t p, std::int64_t q, const SearchOptions& opt = {}) {
  const MubSet set = complete_mub_set(q);
  const auto all = canonical_assignments(p, q);
  SearchResult res;
  res.p = p;
  res.q = q;
  res.candidates = all.size();
  const std::size_t n = std::min(all.size(), opt.budget);
  if (n < all.size()) {
    res.partial = true;
    res.stop_reason = "budget";
  }
  std::vector<std::optional<SearchFinding>> slots(n);
  std::vector<char> done(n, 0);
  const auto start = std::chrono::steady_clock::now();
  std::atomic<bool> timed_out{false};
  parallel_for(n, opt.threads ? opt.threads : worker_count(), [&](std::size_t i) {
    if (opt.deadline_seconds > 0) {
      const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
      if (el.count() > opt.deadline_seconds) {
        timed_out = true;
        return false;
      }
    }
    try {
      const BlockAssignment a = make_assignment(p, q, all[i].k, all[i].l, &set);
      const ExponentMatrix h = theorem1_build(a);
      SearchFinding f;
      f.index = i;
      f.labels = all[i];
      f.root = h.root();
      f.report = defect(h, opt.mode);
      f.fingerprint = fingerprint(haagerup_set(h));
      slots[i] = std::move(f);
    } catch (const Error&) {
    }
    done[i] = 1;
    return true;
  });
  if (timed_out) {
    res.partial = true;
    res.stop_reason = "deadline";
  }
  std::set<std::pair<std::string, std::int64_t>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!done[i]) continue;
    ++res.evaluated;
    if (!slots[i]) {
      ++res.failures;
      continue;
    }
    const auto key = std::make_pair(slots[i]->fingerprint, slots[i]->report.defect);
    if (seen.insert(key).second) {
      res.findings.push_back(std::move(*slots[i]));
    } else {
      for (auto& f : res.findings)
        if (f.fingerprint == key.first && f.report.defect == key.second) ++f.duplicates;
    }
  }
  return res;
}

}  // namespace hadamard

#endif  // HADAMARD_ANALYZE_HPP
