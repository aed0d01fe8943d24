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
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "hadamard6/equivalence.hpp"
#include "hadamard6/families.hpp"
#include "hadamard6/fingerprint.hpp"
#include "hadamard6/matrix.hpp"

namespace hadamard6 {

struct SearchConfig {
  int maxIter = 2000;
  double tol = 1e-8;
  /// Starting point; when empty a random unimodular matrix of `order` is drawn.
  std::optional<UnitMatrix> seed;
  std::uint64_t rngSeed = 0;
  std::size_t order = 6;
};

enum class SearchStatus { Converged, MaxIterExceeded };

struct SearchResult {
  UnitMatrix matrix;
  int iterations = 0;
  double initialDefect = 0.0;
  double finalDefect = 0.0;
  SearchStatus status = SearchStatus::Converged;
};

inline double hadamard_defect(const UnitMatrix& m) {
  return std::max(modulus_defect(m), unitarity_defect(m));
}

inline UnitMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> turns(0.0, 1.0);
  UnitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = std::polar(1.0, 2.0 * kPi * turns(rng));
  return m;
}

/// m_ij <- m_ij / |m_ij|; exact zeros become 1.
inline UnitMatrix normalize_phases(const UnitMatrix& m) {
  UnitMatrix out = m;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      const double r = std::abs(m(i, j));
      out(i, j) = r > 0.0 ? m(i, j) / r : cplx{1.0, 0.0};
    }
  }
  return out;
}

/// sqrt(n) U V^dagger for m = U S V^dagger: the closest matrix, in Frobenius
/// norm, whose columns are orthogonal with norm sqrt(n).
inline UnitMatrix nearest_scaled_unitary(const UnitMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.order());
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXcd q = std::sqrt(static_cast<double>(n)) * svd.matrixU() * svd.matrixV().adjoint();
  UnitMatrix out(m.order());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = q(i, j);
  return out;
}

inline SearchResult project_search(const SearchConfig& cfg) {
  if (cfg.maxIter < 1 || !(cfg.tol > 0.0))
    throw Error(ErrorKind::ParamOutOfRange, "search needs maxIter >= 1 and tol > 0");
  std::mt19937_64 rng(cfg.rngSeed);
  UnitMatrix m = cfg.seed ? *cfg.seed : random_unimodular(cfg.order, rng);
  if (m.order() == 0) throw Error(ErrorKind::DimensionMismatch, "empty seed");

  SearchResult res;
  res.initialDefect = hadamard_defect(m);
  m = normalize_phases(m);
  double defect = hadamard_defect(m);
  UnitMatrix best = m;
  double best_defect = defect;
  int it = 0;
  while (defect > cfg.tol && it < cfg.maxIter) {
    m = normalize_phases(nearest_scaled_unitary(m));
    defect = hadamard_defect(m);
    ++it;
    if (defect < best_defect) {
      best = m;
      best_defect = defect;
    }
  }
  res.iterations = it;
  if (defect <= cfg.tol) {
    res.matrix = std::move(m);
    res.finalDefect = defect;
    res.status = SearchStatus::Converged;
  } else {
    res.matrix = std::move(best);
    res.finalDefect = best_defect;
    res.status = SearchStatus::MaxIterExceeded;
  }
  return res;
}

enum class FamilyLabel { D6, F6Slice, F6TSlice, HFamily, Unknown };

constexpr std::string_view to_string(FamilyLabel label) noexcept {
  switch (label) {
    case FamilyLabel::D6: return "D6";
    case FamilyLabel::F6Slice: return "F6-slice";
    case FamilyLabel::F6TSlice: return "F6T-slice";
    case FamilyLabel::HFamily: return "H-family";
    case FamilyLabel::Unknown: return "unknown";
  }
  return "unknown";
}

struct Classification {
  FamilyLabel label = FamilyLabel::Unknown;
  /// (x1, x2) for H, (a, b) for F6/F6T, (c) for D6; empty for unknown.
  std::vector<double> params;
  /// Sum of absolute differences between sorted Haagerup phase multisets.
  double fingerprintDistance = std::numeric_limits<double>::infinity();
  /// True when the exact equivalence engine confirmed the fitted member.
  bool exact = false;
};

namespace detail {

using Params = std::vector<double>;

struct FamilyModel {
  FamilyLabel label;
  std::function<UnitMatrix(const Params&)> build;
  std::vector<Params> grid;
  double spacing;
  std::function<std::vector<Params>(const Params&)> images;
};

inline double wrap_pi(double x) {
  // into (-pi, pi]
  double r = std::remainder(x, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

inline double squared_mismatch(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return s;
}

/// Orders images so that nonnegative ones come first and, among those, the
/// one with the smaller first coordinate.
inline void canonical_order(std::vector<Params>& images) {
  auto key = [](const Params& p) {
    const bool nonneg = std::all_of(p.begin(), p.end(), [](double v) { return v >= 0.0; });
    return std::make_tuple(!nonneg, p);
  };
  std::stable_sort(images.begin(), images.end(),
                   [&](const Params& a, const Params& b) { return key(a) < key(b); });
}

inline std::vector<Params> dihedral_images(double p1, double p2) {
  std::vector<Params> out;
  for (const auto& [u, v] : {std::pair{p1, p2}, std::pair{p2, p1}})
    for (double su : {1.0, -1.0})
      for (double sv : {1.0, -1.0}) out.push_back({su * std::abs(u), sv * std::abs(v)});
  return out;
}

inline std::vector<FamilyModel> classification_models(int gridN) {
  std::vector<FamilyModel> models;
  const auto n = static_cast<double>(gridN);

  FamilyModel d6{FamilyLabel::D6, [](const Params& p) { return dita_d6(p[0]); }, {}, (kPi / 2) / std::max(1.0, n - 1),
                 [](const Params& p) { return std::vector<Params>{{std::abs(p[0])}, {-std::abs(p[0])}}; }};
  for (int k = 0; k < gridN; ++k) d6.grid.push_back({-kPi / 4 + (kPi / 2) * k / std::max(1.0, n - 1)});

  auto f6_images = [](const Params& p) {
    std::vector<Params> out;
    for (const Params& q : dihedral_images(p[0], p[1]))
      for (double s1 : {0.0, kPi})
        for (double s2 : {0.0, kPi}) out.push_back({wrap_pi(q[0] + s1), wrap_pi(q[1] + s2)});
    canonical_order(out);
    return out;
  };
  std::vector<Params> f6_grid;
  for (int i = 0; i < gridN; ++i)
    for (int j = 0; j < gridN; ++j)
      f6_grid.push_back({-kPi + 2 * kPi * (i + 1) / n, -kPi + 2 * kPi * (j + 1) / n});
  models.push_back(std::move(d6));
  models.push_back({FamilyLabel::F6Slice, [](const Params& p) { return fourier_f6(p[0], p[1]); }, f6_grid,
                    2 * kPi / n, f6_images});
  models.push_back({FamilyLabel::F6TSlice, [](const Params& p) { return fourier_f6t(p[0], p[1]); }, f6_grid,
                    2 * kPi / n, f6_images});

  FamilyModel h{FamilyLabel::HFamily, [](const Params& p) { return family_h(p[0], p[1]); }, {}, kPi / n,
                [](const Params& p) {
                  std::vector<Params> out;
                  for (const Params& q : dihedral_images(p[0], p[1])) {
                    const ParamPoint r = reduce_params(q[0], q[1]).point;
                    out.push_back({r.x1, r.x2});
                  }
                  canonical_order(out);
                  return out;
                }};
  for (int i = 0; i < gridN; ++i)
    for (int j = 0; j < gridN; ++j)
      h.grid.push_back({-kPi / 2 + kPi * (i + 1) / n, -kPi / 2 + kPi * (j + 1) / n});
  models.push_back(std::move(h));
  return models;
}

struct Fit {
  Params params;
  double objective = std::numeric_limits<double>::infinity();
};

/// Compass search on the squared phase mismatch, including diagonal moves.
inline Fit refine(const FamilyModel& model, const std::vector<double>& target, Fit start) {
  auto eval = [&](const Params& p) {
    try {
      return squared_mismatch(haagerup_phases(model.build(p)), target);
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  std::vector<Params> dirs;
  if (start.params.size() == 1) {
    dirs = {{1.0}, {-1.0}};
  } else {
    const double d = std::sqrt(0.5);
    dirs = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {d, d}, {d, -d}, {-d, d}, {-d, -d}};
  }
  double step = model.spacing / 8;
  for (int iter = 0; iter < 20000 && step > 1e-15; ++iter) {
    bool moved = false;
    for (const Params& dir : dirs) {
      Params trial = start.params;
      for (std::size_t k = 0; k < trial.size(); ++k) trial[k] += step * dir[k];
      const double v = eval(trial);
      if (v < start.objective) {
        start = {std::move(trial), v};
        moved = true;
        break;
      }
    }
    if (!moved) step *= 0.5;
  }
  return start;
}

/// Grid cells ordered by squared mismatch; singular or out-of-range
/// parameters are dropped.
inline std::vector<Fit> ranked_cells(const FamilyModel& model, const std::vector<double>& target) {
  std::vector<Fit> cells;
  for (const Params& p : model.grid) {
    try {
      cells.push_back({p, squared_mismatch(haagerup_phases(model.build(p)), target)});
    } catch (const Error&) {
    }
  }
  std::stable_sort(cells.begin(), cells.end(),
                   [](const Fit& a, const Fit& b) { return a.objective < b.objective; });
  return cells;
}

}  // namespace detail

/// Fits `h` against the D6, F6, F6^T and H families by Haagerup fingerprint
/// distance, then confirms the fit with the exact equivalence engine. The
/// fingerprint is not injective on these families (F6 has inequivalent
/// parameter points with identical phase multisets), so every distinct local
/// minimum below the threshold is tried, together with its sign and swap
/// images, until one is exactly equivalent. Label priority: D6, F6, F6^T, H.
inline Classification classify(const UnitMatrix& h, int gridN = 33) {
  if (h.order() != 6 || !is_hadamard(h, 1e-8))
    throw Error(ErrorKind::NotHadamard, "classify needs an order-6 Hadamard matrix");
  if (gridN < 2) throw Error(ErrorKind::ParamOutOfRange, "grid must have at least 2 points");

  constexpr std::size_t kMaxRefinedCells = 48;
  constexpr std::size_t kGiveUpAfter = 6;
  const std::vector<double> target = haagerup_phases(h);
  const double threshold = 1e-4 * static_cast<double>(target.size());
  const EquivalenceOptions exact{1e-6, false, kDefaultFingerprintPrecision};

  Classification fallback;
  for (const auto& model : detail::classification_models(gridN)) {
    const auto cells = detail::ranked_cells(model, target);
    // Refined points modulo the model's symmetry images; each basin is
    // examined once.
    std::vector<detail::Params> basins;
    bool anyWithinThreshold = false;
    auto seen = [&](const detail::Params& p) {
      return std::any_of(basins.begin(), basins.end(), [&](const detail::Params& b) {
        for (const auto& image : model.images(b)) {
          bool close = true;
          for (std::size_t i = 0; i < p.size() && close; ++i) close = std::abs(image[i] - p[i]) <= 1e-6;
          if (close) return true;
        }
        return false;
      });
    };
    for (std::size_t k = 0; k < std::min(kMaxRefinedCells, cells.size()); ++k) {
      if (!anyWithinThreshold && basins.size() >= kGiveUpAfter) break;
      const detail::Fit fit = detail::refine(model, target, cells[k]);
      if (seen(fit.params)) continue;
      basins.push_back(fit.params);
      const double dist = fingerprint_distance(haagerup_phases(model.build(fit.params)), target);
      if (dist < fallback.fingerprintDistance) fallback = {model.label, fit.params, dist, false};
      if (!(dist <= threshold)) continue;
      anyWithinThreshold = true;

      for (const auto& image : model.images(fit.params)) {
        UnitMatrix member;
        try {
          member = model.build(image);
        } catch (const Error&) {
          continue;
        }
        if (!is_hadamard(member, exact.tol)) continue;
        if (are_equivalent(member, h, exact).decision == Decision::Equivalent)
          return {model.label, image, fingerprint_distance(haagerup_phases(member), target), true};
      }
    }
  }

  if (fallback.fingerprintDistance <= threshold) return fallback;
  return {FamilyLabel::Unknown, {}, fallback.fingerprintDistance, false};
}

}  // namespace hadamard6
