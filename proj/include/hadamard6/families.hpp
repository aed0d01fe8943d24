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
#include <cmath>
#include <complex>

#include "hadamard6/matrix.hpp"

// Closed-form order-6 families. The two-parameter family H(x1, x2) is built
// from the ansatz with blocks
//
//     1   1   1   1   1   1
//     1  -1   z1 -z1  z1 -z1
//     1   z2  a   a   b   b
//     1  -z2  a   a   b   b
//     1   z2  b   b   a   a
//     1  -z2  b   b   a   a
//
// where a + b = -Z and each entry of a and b is fixed up to a sign choice.
// Indices in this file are 0-based; "rows 3 and 5" in the usual 1-based
// labeling are rows 2 and 4 here.

namespace hadamard6 {

inline const cplx kI{0.0, 1.0};

/// exp(2 pi i / 6) = (1 + i sqrt 3) / 2
inline const cplx kSixthRoot{0.5, 0.86602540378443864676};

inline cplx unit_phase(double angle) { return std::polar(1.0, angle); }

/// 2x2 complex block, row-major.
struct Block2 {
  std::array<cplx, 4> v{};

  cplx& operator()(int i, int j) { return v[2 * i + j]; }
  const cplx& operator()(int i, int j) const { return v[2 * i + j]; }

  friend Block2 operator+(const Block2& a, const Block2& b) {
    Block2 r;
    for (int k = 0; k < 4; ++k) r.v[k] = a.v[k] + b.v[k];
    return r;
  }
  friend Block2 operator-(const Block2& a, const Block2& b) {
    Block2 r;
    for (int k = 0; k < 4; ++k) r.v[k] = a.v[k] - b.v[k];
    return r;
  }
  friend Block2 operator-(const Block2& a) {
    Block2 r;
    for (int k = 0; k < 4; ++k) r.v[k] = -a.v[k];
    return r;
  }
  friend Block2 operator*(const Block2& a, const Block2& b) {
    Block2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
  }
};

inline Block2 adjoint(const Block2& a) {
  Block2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

inline double max_abs_diff(const Block2& a, const Block2& b) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(a.v[k] - b.v[k]));
  return worst;
}

/// max |a - s*I|
inline double deviation_from_scaled_identity(const Block2& a, double s) {
  Block2 id;
  id(0, 0) = s;
  id(1, 1) = s;
  return max_abs_diff(a, id);
}

struct ParamPoint {
  double x1 = 0.0;
  double x2 = 0.0;

  bool operator==(const ParamPoint&) const = default;
};

inline bool in_canonical_domain(const ParamPoint& p) {
  return p.x1 > -kPi / 2 && p.x1 <= kPi / 2 && p.x2 > -kPi / 2 && p.x2 <= kPi / 2;
}

/// Signs of the element-wise solution; admissible iff s11 s21 = s12 s22.
struct SignPattern {
  int s11 = 1;
  int s12 = 1;
  int s21 = -1;
  int s22 = -1;

  int at(int i, int j) const { return i == 0 ? (j == 0 ? s11 : s12) : (j == 0 ? s21 : s22); }

  bool admissible() const {
    auto unit = [](int s) { return s == 1 || s == -1; };
    return unit(s11) && unit(s12) && unit(s21) && unit(s22) && s11 * s21 == s12 * s22;
  }

  /// s11 = s12 = +1, s21 = s22 = -1: the choice that makes a and b Hadamard.
  static constexpr SignPattern representative() { return {1, 1, -1, -1}; }

  static std::array<SignPattern, 8> all_admissible() {
    std::array<SignPattern, 8> out{};
    std::size_t k = 0;
    for (int s11 : {1, -1})
      for (int s12 : {1, -1})
        for (int s21 : {1, -1}) out[k++] = {s11, s12, s21, s11 * s21 * s12};
    return out;
  }

  bool operator==(const SignPattern&) const = default;
};

struct ZBlock {
  Block2 Z;
  cplx z1;
  cplx z2;
};

inline ZBlock z_block(const ParamPoint& p) {
  const cplx z1 = unit_phase(p.x1);
  const cplx z2 = unit_phase(p.x2);
  const cplx z1b = std::conj(z1);
  const cplx z2b = std::conj(z2);
  ZBlock zb{{}, z1, z2};
  zb.Z(0, 0) = 1.0 - 0.5 * (1.0 - z1) * (1.0 - z2);
  zb.Z(0, 1) = z2 * (1.0 - 0.5 * (1.0 - z1) * (1.0 - z2b));
  zb.Z(1, 0) = z1 * (1.0 - 0.5 * (1.0 - z1b) * (1.0 - z2));
  zb.Z(1, 1) = -z1 * z2 * (1.0 - 0.5 * (1.0 - z1b) * (1.0 - z2b));
  return zb;
}

struct ABPair {
  Block2 a;
  Block2 b;
};

inline constexpr double kSingularGuard = 1e-12;

inline ABPair solve_ab(const ParamPoint& p, const SignPattern& s = SignPattern::representative()) {
  if (!s.admissible())
    throw Error(ErrorKind::InadmissibleSigns, "sign pattern violates s11*s21 == s12*s22");
  const ZBlock zb = z_block(p);
  ABPair ab;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const cplx zij = zb.Z(i, j);
      const double mod2 = std::norm(zij);
      if (mod2 < kSingularGuard) throw Error(ErrorKind::SingularZ, "|Z_ij|^2 below guard");
      // |Z_ij|^2 <= 2, so the radicand is nonnegative up to rounding.
      const double root = std::sqrt(std::max(0.0, 1.0 / mod2 - 0.25));
      const cplx rot = s.at(i, j) * root * kI;
      ab.a(i, j) = -zij * (0.5 + rot);
      ab.b(i, j) = -zij * (0.5 - rot);
    }
  }
  return ab;
}

/// Lays out the ansatz with a on the block diagonal and b off it.
inline UnitMatrix assemble_h(const ParamPoint& p, const ABPair& ab) {
  const cplx z1 = unit_phase(p.x1);
  const cplx z2 = unit_phase(p.x2);
  UnitMatrix h(6);
  const std::array<cplx, 6> row1{1.0, -1.0, z1, -z1, z1, -z1};
  const std::array<cplx, 4> col1{z2, -z2, z2, -z2};
  for (std::size_t j = 0; j < 6; ++j) h(1, j) = row1[j];
  for (std::size_t i = 0; i < 4; ++i) h(i + 2, 1) = col1[i];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      h(2 + i, 2 + j) = ab.a(i, j);
      h(2 + i, 4 + j) = ab.b(i, j);
      h(4 + i, 2 + j) = ab.b(i, j);
      h(4 + i, 4 + j) = ab.a(i, j);
    }
  }
  return h;
}

/// f(x1, x2) = (1 - (1-z1)(1-z2)/2) (1/2 + i sqrt(1/(1 + sin x1 sin x2) - 1/4)).
inline cplx f_factor(double x1, double x2) {
  const double denom = 1.0 + std::sin(x1) * std::sin(x2);
  if (denom <= kSingularGuard) throw Error(ErrorKind::SingularZ, "1 + sin x1 sin x2 below guard");
  const cplx z1 = unit_phase(x1);
  const cplx z2 = unit_phase(x2);
  const cplx prefactor = 1.0 - 0.5 * (1.0 - z1) * (1.0 - z2);
  return prefactor * cplx(0.5, std::sqrt(std::max(0.0, 1.0 / denom - 0.25)));
}

struct FFactors {
  cplx f1, f2, f3, f4;
};

inline FFactors f_factors(const ParamPoint& p) {
  return {f_factor(p.x1, p.x2), f_factor(p.x1, -p.x2), f_factor(-p.x1, -p.x2),
          f_factor(-p.x1, p.x2)};
}

/// The two-parameter family in its closed form. Any real angles are accepted
/// (the formula is 2 pi periodic); the canonical domain is
/// (-pi/2, pi/2]^2, see reduce_params.
inline UnitMatrix family_h(const ParamPoint& p) {
  const double ss = std::sin(p.x1) * std::sin(p.x2);
  if (1.0 + ss <= kSingularGuard || 1.0 - ss <= kSingularGuard)
    throw Error(ErrorKind::SingularZ, "parameter point on a singular corner direction");
  const auto [f1, f2, f3, f4] = f_factors(p);
  const cplx z1 = unit_phase(p.x1);
  const cplx z2 = unit_phase(p.x2);
  const cplx z12 = z1 * z2;
  auto c = [](cplx v) { return std::conj(v); };
  return UnitMatrix{
      {1.0, 1.0, 1.0, 1.0, 1.0, 1.0},
      {1.0, -1.0, z1, -z1, z1, -z1},
      {1.0, z2, -f1, -z2 * f2, -c(f3), -z2 * c(f4)},
      {1.0, -z2, -z1 * c(f2), z12 * c(f1), -z1 * f4, z12 * f3},
      {1.0, z2, -c(f3), -z2 * c(f4), -f1, -z2 * f2},
      {1.0, -z2, -z1 * f4, z12 * f3, -z1 * c(f2), z12 * c(f1)},
  };
}

inline UnitMatrix family_h(double x1, double x2) { return family_h(ParamPoint{x1, x2}); }

struct ReducedParams {
  ParamPoint point;
  EquivalenceWitness witness;
};

/// Shifts each angle by a multiple of pi into (-pi/2, pi/2]. The witness
/// satisfies apply_equivalence(family_h(point), witness) == family_h(x1, x2),
/// using H(x1 + pi, x2) = H(x1, x2) P34 P56 and H(x1, x2 + pi) = P36 P45 H(x1, x2).
inline ReducedParams reduce_params(double x1, double x2) {
  auto shifts = [](double x) { return static_cast<long long>(std::ceil((x - kPi / 2) / kPi)); };
  long long k1 = shifts(x1);
  long long k2 = shifts(x2);
  double r1 = x1 - static_cast<double>(k1) * kPi;
  double r2 = x2 - static_cast<double>(k2) * kPi;
  // Rounding in the subtraction can land just outside the half-open interval.
  if (r1 <= -kPi / 2) { r1 += kPi; --k1; }
  if (r2 <= -kPi / 2) { r2 += kPi; --k2; }

  auto w = EquivalenceWitness::identity(6);
  if (k1 % 2 != 0) w.colPerm = swap_permutation(6, {{2, 3}, {4, 5}});
  if (k2 % 2 != 0) w.rowPerm = swap_permutation(6, {{2, 5}, {3, 4}});
  return {{r1, r2}, std::move(w)};
}

/// F6^(2)(a, b), dephased two-parameter Fourier family.
inline UnitMatrix fourier_f6(double a, double b) {
  const cplx z1 = unit_phase(a);
  const cplx z2 = unit_phase(b);
  const cplx f = kSixthRoot;
  const cplx fb = std::conj(f);
  return UnitMatrix{
      {1.0, 1.0, 1.0, 1.0, 1.0, 1.0},
      {1.0, z1 * f, -z2 * fb, -1.0, -z1 * f, z2 * fb},
      {1.0, -fb, -f, 1.0, -fb, -f},
      {1.0, -z1, z2, -1.0, z1, -z2},
      {1.0, -f, -fb, 1.0, -f, -fb},
      {1.0, z1 * fb, -z2 * f, -1.0, -z1 * fb, z2 * f},
  };
}

inline UnitMatrix fourier_f6t(double a, double b) { return transpose(fourier_f6(a, b)); }

/// D6^(1)(c) for -pi/4 <= c <= pi/4.
inline UnitMatrix dita_d6(double c) {
  if (!(c >= -kPi / 4 && c <= kPi / 4))
    throw Error(ErrorKind::ParamOutOfRange, "Dita parameter must lie in [-pi/4, pi/4]");
  const cplx z = unit_phase(c);
  const cplx zb = std::conj(z);
  const cplx i = kI;
  return UnitMatrix{
      {1.0, 1.0, 1.0, 1.0, 1.0, 1.0},
      {1.0, -1.0, i, -i, -i, i},
      {1.0, i, -1.0, i * z, -i * z, -i},
      {1.0, -i, i * zb, -1.0, i, -i * zb},
      {1.0, -i, -i * zb, i, -1.0, i * zb},
      {1.0, i, -i, -i * z, i * z, -1.0},
  };
}

struct GFactors {
  cplx g1, g2, g3;
};

/// Diagonal-slice factors: f1 = z g1, f2 = f4 = g2, f3 = conj(z) g3 on H(x, x).
inline GFactors g_factors(double x) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  if (c * c <= kSingularGuard) throw Error(ErrorKind::SingularZ, "cos^2 x below guard");
  const cplx tail(0.5, std::sqrt(1.0 / (1.0 + s * s) - 0.25));
  return {cplx(1.0, -s) * tail, c * cplx(0.5, std::sqrt(std::max(0.0, 1.0 / (c * c) - 0.25))),
          cplx(1.0, s) * tail};
}

/// P46 H(x, x), written out from g1, g2, g3. Symmetric.
inline UnitMatrix symmetric_m(double x) {
  const auto [g1, g2, g3] = g_factors(x);
  const cplx z = unit_phase(x);
  auto c = [](cplx v) { return std::conj(v); };
  return UnitMatrix{
      {1.0, 1.0, 1.0, 1.0, 1.0, 1.0},
      {1.0, -1.0, z, -z, z, -z},
      {1.0, z, -z * g1, -z * g2, -z * c(g3), -z * c(g2)},
      {1.0, -z, -z * g2, z * g3, -z * c(g2), z * c(g1)},
      {1.0, z, -z * c(g3), -z * c(g2), -z * g1, -z * g2},
      {1.0, -z, -z * c(g2), z * c(g1), -z * g2, z * g3},
  };
}

/// H(x, -x); equivalent to its adjoint through H = P35 H^dagger P46.
inline UnitMatrix self_adjoint_h(double x) { return family_h(x, -x); }

/// Limit of H at the corner x1, x2 -> pi/2, approached along
/// x = arctan((e1 - e2)/(e1 + e2)) with x1 = pi/2 - e1, x2 = pi/2 - e2.
inline UnitMatrix dita_corner(double x) {
  if (!(x > -kPi / 4 && x < kPi / 4))
    throw Error(ErrorKind::ParamOutOfRange, "corner angle must lie in (-pi/4, pi/4)");
  const cplx z = unit_phase(x);
  const cplx zb = std::conj(z);
  const cplx i = kI;
  return UnitMatrix{
      {1.0, 1.0, 1.0, 1.0, 1.0, 1.0},
      {1.0, -1.0, i, -i, i, -i},
      {1.0, i, -i, z, -1.0, -z},
      {1.0, -i, -zb, i, zb, -1.0},
      {1.0, i, -1.0, -z, -i, z},
      {1.0, -i, zb, -1.0, -zb, i},
  };
}

enum class Border {
  X2AtHalfPi,  ///< H(x, pi/2)
  X1AtHalfPi,  ///< H(pi/2, x)
};

inline UnitMatrix border_h(Border which, double x) {
  return which == Border::X2AtHalfPi ? family_h(x, kPi / 2) : family_h(kPi / 2, x);
}

}  // namespace hadamard6
