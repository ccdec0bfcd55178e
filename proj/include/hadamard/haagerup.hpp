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

#ifndef HADAMARD_HAAGERUP_HPP
#define HADAMARD_HAAGERUP_HPP

// The Haagerup set {h_ij h_kl conj(h_il) conj(h_kj)}, an equivalence invariant.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "hadamard/matrix.hpp"

namespace hadamard {

/// Exact form: sorted exponents over the smallest root that holds them all.
struct HaagerupSet {
  std::int64_t root = 1;
  std::vector<std::int64_t> exponents;

  bool contains(const RootExponent& w) const {
    const std::int64_t num = w.k * root;
    if (num % w.r != 0) return false;
    return std::binary_search(exponents.begin(), exponents.end(), floor_mod(num / w.r, root));
  }
  std::size_t size() const { return exponents.size(); }
  friend bool operator==(const HaagerupSet&, const HaagerupSet&) = default;
};

/// Float form: angles in [0, 2 pi), sorted, merged within 1e-7.
struct HaagerupAngles {
  std::vector<double> angles;
  static constexpr double kTolerance = 1e-7;

  bool approx_equal(const HaagerupAngles& o) const {
    if (angles.size() != o.angles.size()) return false;
    for (std::size_t i = 0; i < angles.size(); ++i) {
      if (std::abs(angles[i] - o.angles[i]) > kTolerance) return false;
    }
    return true;
  }
};

inline HaagerupSet haagerup_set(const ExponentMatrix& h) {
  const std::size_t d = h.order();
  const std::int64_t r = h.root();
  std::vector<char> seen(static_cast<std::size_t>(r), 0);
  std::vector<std::int64_t> diff(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = i; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) diff[j] = h(i, j) - h(k, j);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) seen[static_cast<std::size_t>(floor_mod(diff[j] - diff[l], r))] = 1;
    }
  }
  std::int64_t g = r;
  std::vector<std::int64_t> e;
  for (std::int64_t k = 0; k < r; ++k) {
    if (seen[static_cast<std::size_t>(k)]) {
      e.push_back(k);
      g = std::gcd(g, k);
    }
  }
  for (auto& x : e) x /= g;
  return {r / g, std::move(e)};
}

inline HaagerupAngles haagerup_set(const ComplexMatrix& h) {
  const std::size_t d = h.order();
  std::vector<double> raw;
  raw.reserve(d * d * d * (d + 1) / 2);
  std::vector<std::complex<double>> diff(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = i; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) diff[j] = h(i, j) * std::conj(h(k, j));
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t l = 0; l < d; ++l) {
          double a = std::arg(diff[j] * std::conj(diff[l]));
          if (a < 0) a += 2.0 * std::numbers::pi;
          raw.push_back(a);
        }
      }
    }
  }
  std::sort(raw.begin(), raw.end());
  HaagerupAngles out;
  for (double a : raw) {
    if (out.angles.empty() || a - out.angles.back() > HaagerupAngles::kTolerance) out.angles.push_back(a);
  }
  // 2 pi - tiny is the same angle as 0.
  while (out.angles.size() > 1 && 2.0 * std::numbers::pi - out.angles.back() <= HaagerupAngles::kTolerance) {
    out.angles.pop_back();
  }
  if (!out.angles.empty() && out.angles.front() <= HaagerupAngles::kTolerance) out.angles.front() = 0.0;
  return out;
}

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// "r:e1,e2,...".
inline std::string canonical_string(const HaagerupSet& s) {
  std::string out = std::to_string(s.root) + ":";
  for (std::size_t i = 0; i < s.exponents.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.exponents[i]);
  }
  return out;
}

/// 16 hex digits of the FNV-1a hash of canonical_string.
inline std::string fingerprint(const HaagerupSet& s) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical_string(s))));
  return buf;
}

}  // namespace hadamard

#endif  // HADAMARD_HAAGERUP_HPP
