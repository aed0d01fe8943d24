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

#include <array>
#include <string>
#include <string_view>

#include "hadamard6/families.hpp"
#include "hadamard6/matrix.hpp"

namespace hadamard6 {

/// Order-6 families that can feed the order-12 block construction. X6 is
/// reserved for a family that has no constructor here yet.
enum class FamilySelector { F6, F6T, H, X6 };

constexpr std::string_view to_string(FamilySelector f) noexcept {
  switch (f) {
    case FamilySelector::F6: return "f6";
    case FamilySelector::F6T: return "f6t";
    case FamilySelector::H: return "h";
    case FamilySelector::X6: return "x6";
  }
  return "?";
}

inline FamilySelector family_selector_from_string(std::string_view s) {
  if (s == "f6") return FamilySelector::F6;
  if (s == "f6t") return FamilySelector::F6T;
  if (s == "h") return FamilySelector::H;
  if (s == "x6") return FamilySelector::X6;
  throw Error(ErrorKind::UnknownFamily, "unknown family selector '" + std::string(s) + "'");
}

struct FamilyMember {
  FamilySelector family = FamilySelector::H;
  double p1 = 0.0;
  double p2 = 0.0;
};

inline UnitMatrix build_member(const FamilyMember& m) {
  switch (m.family) {
    case FamilySelector::F6: return fourier_f6(m.p1, m.p2);
    case FamilySelector::F6T: return fourier_f6t(m.p1, m.p2);
    case FamilySelector::H: return family_h(m.p1, m.p2);
    case FamilySelector::X6: break;
  }
  throw Error(ErrorKind::UnknownFamily, "no constructor for family x6");
}

struct ComposeSpec {
  FamilyMember h1;
  FamilyMember h2;
  std::array<double, 5> deltas{};
};

/// [[H1, D H2], [H1, -D H2]] with D = diag(1, e^{i d1}, ..., e^{i d5}).
inline UnitMatrix compose12(const UnitMatrix& h1, const UnitMatrix& h2, const std::array<double, 5>& deltas,
                            double tol = kDefaultTol) {
  if (h1.order() != 6 || h2.order() != 6)
    throw Error(ErrorKind::DimensionMismatch, "compose12 takes two order-6 matrices");
  if (!is_hadamard(h1, tol) || !is_hadamard(h2, tol))
    throw Error(ErrorKind::NotHadamard, "compose12 inputs must be Hadamard");
  std::array<cplx, 6> d{};
  d[0] = 1.0;
  for (std::size_t k = 0; k < 5; ++k) d[k + 1] = unit_phase(deltas[k]);
  UnitMatrix out(12);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      out(i, j) = h1(i, j);
      out(i + 6, j) = h1(i, j);
      out(i, j + 6) = d[i] * h2(i, j);
      out(i + 6, j + 6) = -d[i] * h2(i, j);
    }
  }
  return out;
}

inline UnitMatrix compose12(const ComposeSpec& spec) {
  return compose12(build_member(spec.h1), build_member(spec.h2), spec.deltas);
}

}  // namespace hadamard6
