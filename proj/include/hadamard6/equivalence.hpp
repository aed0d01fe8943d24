// Copyright 2026 The hadamard6 Authors
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

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hadamard6/fingerprint.hpp"
#include "hadamard6/matrix.hpp"

namespace hadamard6 {

enum class Decision { Equivalent, Inequivalent, Inconclusive };

constexpr std::string_view to_string(Decision d) noexcept {
  switch (d) {
    case Decision::Equivalent: return "equivalent";
    case Decision::Inequivalent: return "inequivalent";
    case Decision::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

struct EquivalenceResult {
  Decision decision = Decision::Inconclusive;
  std::optional<EquivalenceWitness> witness;
  std::optional<std::string> screenedBy;
};

struct EquivalenceOptions {
  double tol = kDefaultTol;
  /// Reject early on a fingerprint mismatch. Order 12 is always screened.
  bool screen = true;
  int precision = kDefaultFingerprintPrecision;
};

inline bool fingerprint_match(const UnitMatrix& h1, const UnitMatrix& h2,
                              int precision = kDefaultFingerprintPrecision) {
  const Fingerprint a = fingerprint(h1, precision);
  const Fingerprint b = fingerprint(h2, precision);
  return a == b;
}

namespace detail {

// Backtracking assignment of source rows to target rows 1..n-1, given the
// dephased rows of the column-permuted source. Candidates are tried in
// ascending order, so the first complete assignment is lexicographically
// smallest for the fixed first row.
class RowMatcher {
 public:
  RowMatcher(const std::vector<std::vector<cplx>>& rows, const UnitMatrix& target, double tol)
      : rows_(rows), target_(target), tol_(tol), n_(target.order()) {}

  bool solve(std::size_t first, Permutation& perm) {
    perm.assign(n_, 0);
    used_.assign(n_, false);
    perm[0] = first;
    used_[first] = true;
    head_ = first;
    return extend(1, perm);
  }

 private:
  bool row_matches(std::size_t src, std::size_t pos) const {
    const auto& head = rows_[head_];
    for (std::size_t j = 1; j < n_; ++j) {
      const cplx v = rows_[src][j] * std::conj(head[j]);
      if (std::abs(v - target_(pos, j)) > tol_) return false;
    }
    return true;
  }

  bool extend(std::size_t pos, Permutation& perm) {
    if (pos == n_) return true;
    for (std::size_t r = 0; r < n_; ++r) {
      if (used_[r] || !row_matches(r, pos)) continue;
      used_[r] = true;
      perm[pos] = r;
      if (extend(pos + 1, perm)) return true;
      used_[r] = false;
    }
    return false;
  }

  const std::vector<std::vector<cplx>>& rows_;
  const UnitMatrix& target_;
  double tol_;
  std::size_t n_;
  std::size_t head_ = 0;
  std::vector<bool> used_;
};

}  // namespace detail

/// Decides H2 = D2 P2 H1 P1 D1 for order-6 Hadamard matrices by exhaustive
/// search over column permutations (outer, lexicographic) and row
/// permutations (inner, lexicographic). Diagonals are forced by dephasing,
/// so each permutation pair is a single entrywise comparison against the
/// dephased H2 at 10 * tol. Order 12 gets the fingerprint screen only.
inline EquivalenceResult are_equivalent(const UnitMatrix& h1, const UnitMatrix& h2,
                                        const EquivalenceOptions& opts = {}) {
  const std::size_t n = h1.order();
  if (h2.order() != n) throw Error(ErrorKind::DimensionMismatch, "orders differ");
  if (n != 6 && n != 12) throw Error(ErrorKind::OrderUnsupported, "only orders 6 and 12 are supported");
  if (!is_hadamard(h1, opts.tol) || !is_hadamard(h2, opts.tol))
    throw Error(ErrorKind::NotHadamard, "inputs must be Hadamard within tolerance");

  if (opts.screen || n == 12) {
    if (!fingerprint_match(h1, h2, opts.precision))
      return {Decision::Inequivalent, std::nullopt,
              "fingerprint mismatch at precision " + std::to_string(opts.precision)};
    if (n == 12) return {Decision::Inconclusive, std::nullopt, std::nullopt};
  }

  const Dephased target = dephase(h2);
  const double match_tol = 10.0 * opts.tol;

  Permutation cols = identity_permutation(n);
  std::vector<std::vector<cplx>> rows(n, std::vector<cplx>(n));
  Permutation row_perm;
  do {
    for (std::size_t r = 0; r < n; ++r) {
      const cplx lead = std::conj(h1(r, cols[0])) / std::abs(h1(r, cols[0]));
      for (std::size_t j = 0; j < n; ++j) rows[r][j] = h1(r, cols[j]) * lead;
    }
    detail::RowMatcher matcher(rows, target.matrix, match_tol);
    for (std::size_t first = 0; first < n; ++first) {
      if (!matcher.solve(first, row_perm)) continue;

      auto perms = EquivalenceWitness::identity(n);
      perms.rowPerm = row_perm;
      perms.colPerm = cols;
      const Dephased source = dephase(apply_equivalence(h1, perms));
      EquivalenceWitness w = perms;
      for (std::size_t i = 0; i < n; ++i) {
        w.rowPhases[i] = std::conj(target.witness.rowPhases[i]) * source.witness.rowPhases[i];
        w.colPhases[i] = source.witness.colPhases[i] * std::conj(target.witness.colPhases[i]);
      }
      if (max_abs_diff(apply_equivalence(h1, w), h2) <= match_tol)
        return {Decision::Equivalent, std::move(w), std::nullopt};
    }
  } while (std::next_permutation(cols.begin(), cols.end()));

  return {Decision::Inequivalent, std::nullopt, std::nullopt};
}

}  // namespace hadamard6
