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
#include <vector>

#include "hadamard6/matrix.hpp"

namespace hadamard6 {

inline constexpr int kDefaultFingerprintPrecision = 8;

/// Sorted multiset of Haagerup phases |arg(h_ij h_kl conj(h_il) conj(h_kj))|
/// over i < k, j < l, rounded to `precision` decimals.
///
/// Swapping i and k (or j and l) conjugates the quadruple product, so the
/// absolute phase in [0, pi] is what survives arbitrary row and column
/// permutations. Diagonal phases cancel inside each product.
struct Fingerprint {
  std::vector<double> values;
  int precision = kDefaultFingerprintPrecision;

  bool operator==(const Fingerprint&) const = default;
};

/// Unrounded sorted invariants; no Hadamard check. Used for distances.
inline std::vector<double> haagerup_phases(const UnitMatrix& m) {
  const std::size_t n = m.order();
  std::vector<double> out;
  out.reserve(n * (n - 1) / 2 * n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l)
          out.push_back(std::abs(std::arg(m(i, j) * m(k, l) * std::conj(m(i, l)) * std::conj(m(k, j)))));
  std::sort(out.begin(), out.end());
  return out;
}

inline Fingerprint fingerprint(const UnitMatrix& m, int precision = kDefaultFingerprintPrecision) {
  if (!is_hadamard(m, 1e-8)) throw Error(ErrorKind::NotHadamard, "fingerprint needs a Hadamard matrix");
  const double scale = std::pow(10.0, precision);
  Fingerprint fp{haagerup_phases(m), precision};
  for (double& v : fp.values) v = std::round(v * scale) / scale;
  std::sort(fp.values.begin(), fp.values.end());
  return fp;
}

/// Sum of absolute differences of two sorted multisets of equal size.
inline double fingerprint_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "fingerprint sizes differ");
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::abs(a[k] - b[k]);
  return sum;
}

}  // namespace hadamard6
