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
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "hadamard6/error.hpp"

namespace hadamard6 {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultTol = 1e-10;

/// Square complex matrix stored row-major. Entries are meant to lie on the
/// unit circle but nothing is enforced; modulus_defect() measures how far
/// they are from it.
class UnitMatrix {
 public:
  UnitMatrix() = default;

  /// n x n matrix filled with ones.
  explicit UnitMatrix(std::size_t n) : n_(n), data_(n * n, cplx{1.0, 0.0}) {}

  UnitMatrix(std::size_t n, std::vector<cplx> entries) : n_(n), data_(std::move(entries)) {
    if (data_.size() != n_ * n_)
      throw Error(ErrorKind::DimensionMismatch, "entry count does not match order");
  }

  UnitMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_)
        throw Error(ErrorKind::DimensionMismatch, "matrix literal is not square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t order() const noexcept { return n_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const cplx> entries() const noexcept { return data_; }

  bool operator==(const UnitMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<cplx> data_;
};

/// out(i, :) = in(perm[i], :) for rows, out(:, j) = in(:, perm[j]) for columns.
using Permutation = std::vector<std::size_t>;

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

/// Permutation built from a product of disjoint swaps (0-based indices).
inline Permutation swap_permutation(std::size_t n,
                                    std::initializer_list<std::pair<std::size_t, std::size_t>> swaps) {
  Permutation p = identity_permutation(n);
  for (auto [i, j] : swaps) std::swap(p[i], p[j]);
  return p;
}

inline bool is_permutation_of(const Permutation& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// The data of H2 = D2 P2 H1 P1 D1. Applying it to M gives
/// out(i, j) = rowPhases[i] * M(rowPerm[i], colPerm[j]) * colPhases[j].
struct EquivalenceWitness {
  Permutation rowPerm;
  std::vector<cplx> rowPhases;
  Permutation colPerm;
  std::vector<cplx> colPhases;

  static EquivalenceWitness identity(std::size_t n) {
    return {identity_permutation(n), std::vector<cplx>(n, 1.0), identity_permutation(n),
            std::vector<cplx>(n, 1.0)};
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < rowPerm.size(); ++i)
      if (rowPerm[i] != i || rowPhases[i] != cplx{1.0}) return false;
    for (std::size_t j = 0; j < colPerm.size(); ++j)
      if (colPerm[j] != j || colPhases[j] != cplx{1.0}) return false;
    return true;
  }

  bool operator==(const EquivalenceWitness&) const = default;
};

inline double modulus_defect(const UnitMatrix& m) {
  double worst = 0.0;
  for (const cplx& v : m.entries()) worst = std::max(worst, std::abs(std::abs(v) - 1.0));
  return worst;
}

/// max |(H^dagger H / n - 1)_{jl}|
inline double unitarity_defect(const UnitMatrix& m) {
  const std::size_t n = m.order();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      cplx acc{0.0, 0.0};
      for (std::size_t i = 0; i < n; ++i) acc += std::conj(m(i, j)) * m(i, l);
      acc /= static_cast<double>(n);
      if (j == l) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

inline bool is_hadamard(const UnitMatrix& m, double tol = kDefaultTol) {
  return m.order() > 0 && modulus_defect(m) <= tol && unitarity_defect(m) <= tol;
}

inline double max_abs_diff(const UnitMatrix& a, const UnitMatrix& b) {
  if (a.order() != b.order()) throw Error(ErrorKind::DimensionMismatch, "orders differ");
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) worst = std::max(worst, std::abs(ea[k] - eb[k]));
  return worst;
}

inline UnitMatrix transpose(const UnitMatrix& m) {
  UnitMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) out(j, i) = m(i, j);
  return out;
}

inline UnitMatrix dagger(const UnitMatrix& m) {
  UnitMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

inline UnitMatrix conjugate(const UnitMatrix& m) {
  UnitMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) out(i, j) = std::conj(m(i, j));
  return out;
}

inline UnitMatrix scaled(const UnitMatrix& m, cplx factor) {
  UnitMatrix out = m;
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) out(i, j) *= factor;
  return out;
}

inline UnitMatrix apply_equivalence(const UnitMatrix& m, const EquivalenceWitness& w) {
  const std::size_t n = m.order();
  if (w.rowPhases.size() != n || w.colPhases.size() != n || !is_permutation_of(w.rowPerm, n) ||
      !is_permutation_of(w.colPerm, n))
    throw Error(ErrorKind::DimensionMismatch, "witness does not match matrix order");
  UnitMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = w.rowPhases[i] * m(w.rowPerm[i], w.colPerm[j]) * w.colPhases[j];
  return out;
}

inline UnitMatrix permute_rows(const UnitMatrix& m, const Permutation& p) {
  auto w = EquivalenceWitness::identity(m.order());
  w.rowPerm = p;
  return apply_equivalence(m, w);
}

inline UnitMatrix permute_cols(const UnitMatrix& m, const Permutation& p) {
  auto w = EquivalenceWitness::identity(m.order());
  w.colPerm = p;
  return apply_equivalence(m, w);
}

/// P_ij * M, 0-based.
inline UnitMatrix swap_rows(const UnitMatrix& m, std::size_t i, std::size_t j) {
  return permute_rows(m, swap_permutation(m.order(), {{i, j}}));
}

/// M * P_ij, 0-based.
inline UnitMatrix swap_cols(const UnitMatrix& m, std::size_t i, std::size_t j) {
  return permute_cols(m, swap_permutation(m.order(), {{i, j}}));
}

inline UnitMatrix scale_cols(const UnitMatrix& m, std::span<const cplx> phases) {
  if (phases.size() != m.order()) throw Error(ErrorKind::DimensionMismatch, "phase count");
  auto w = EquivalenceWitness::identity(m.order());
  w.colPhases.assign(phases.begin(), phases.end());
  return apply_equivalence(m, w);
}

inline UnitMatrix scale_rows(const UnitMatrix& m, std::span<const cplx> phases) {
  if (phases.size() != m.order()) throw Error(ErrorKind::DimensionMismatch, "phase count");
  auto w = EquivalenceWitness::identity(m.order());
  w.rowPhases.assign(phases.begin(), phases.end());
  return apply_equivalence(m, w);
}

struct Dephased {
  UnitMatrix matrix;
  EquivalenceWitness witness;
};

/// Brings m to the form with ones in the first row and column. Row phases are
/// conj(m_i0)/|m_i0|; column phases come from the rescaled first row.
inline Dephased dephase(const UnitMatrix& m) {
  const std::size_t n = m.order();
  auto w = EquivalenceWitness::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::abs(m(i, 0));
    if (r < 0.5) throw Error(ErrorKind::NearZeroEntry, "first column entry too small to dephase");
    w.rowPhases[i] = std::conj(m(i, 0)) / r;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const cplx head = w.rowPhases[0] * m(0, j);
    const double r = std::abs(head);
    if (r < 0.5) throw Error(ErrorKind::NearZeroEntry, "first row entry too small to dephase");
    w.colPhases[j] = std::conj(head) / r;
  }
  return {apply_equivalence(m, w), std::move(w)};
}

/// Single witness equivalent to applying `first` and then `second`.
inline EquivalenceWitness compose(const EquivalenceWitness& first, const EquivalenceWitness& second) {
  const std::size_t n = first.rowPerm.size();
  if (second.rowPerm.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "witness orders differ");
  // out2(i,j) = r2[i] * out1(p2[i], q2[j]) * c2[j]
  //           = r2[i] r1[p2[i]] * m(p1[p2[i]], q1[q2[j]]) * c1[q2[j]] c2[j]
  EquivalenceWitness w = EquivalenceWitness::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    w.rowPerm[i] = first.rowPerm[second.rowPerm[i]];
    w.rowPhases[i] = second.rowPhases[i] * first.rowPhases[second.rowPerm[i]];
    w.colPerm[i] = first.colPerm[second.colPerm[i]];
    w.colPhases[i] = first.colPhases[second.colPerm[i]] * second.colPhases[i];
  }
  return w;
}

}  // namespace hadamard6
