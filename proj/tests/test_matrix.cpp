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

#include <catch_amalgamated.hpp>

#include <random>

#include "hadamard6/hadamard6.hpp"
#include "test_support.hpp"

using namespace hadamard6;

TEST_CASE("modulus_defect") {
  UnitMatrix ones(6);
  CHECK(modulus_defect(ones) == 0.0);
  CHECK(modulus_defect(fourier_f6(0, 0)) <= 1e-15);

  UnitMatrix m(4);
  m(2, 1) = 1.5;
  CHECK(modulus_defect(m) == Catch::Approx(0.5).margin(1e-15));
}

TEST_CASE("unitarity_defect") {
  CHECK(unitarity_defect(fourier_f6(0, 0)) <= 1e-14);
  CHECK(unitarity_defect(dita_d6(0.7)) <= 1e-14);
  CHECK(unitarity_defect(UnitMatrix(2)) == Catch::Approx(1.0).margin(1e-15));
}

TEST_CASE("is_hadamard") {
  CHECK(is_hadamard(fourier_f6(0, 0), 1e-10));
  CHECK(is_hadamard(family_h(0.3, 0.2), 1e-10));
  CHECK_FALSE(is_hadamard(UnitMatrix(6), 1e-10));
  CHECK(testing::reference_unitarity_defect(family_h(0.3, 0.2)) <= 1e-14);
}

TEST_CASE("dephase") {
  const UnitMatrix f = fourier_f6(0, 0);

  SECTION("already dephased input is unchanged") {
    const Dephased d = dephase(f);
    CHECK(max_abs_diff(d.matrix, f) <= 1e-15);
    CHECK(d.witness.rowPerm == identity_permutation(6));
    CHECK(d.witness.colPerm == identity_permutation(6));
    for (auto v : d.witness.rowPhases) CHECK(std::abs(v - 1.0) <= 1e-15);
    for (auto v : d.witness.colPhases) CHECK(std::abs(v - 1.0) <= 1e-15);
  }

  SECTION("row phase is removed") {
    std::vector<cplx> rows(6, 1.0);
    rows[1] = kI;
    CHECK(max_abs_diff(dephase(scale_rows(f, rows)).matrix, f) <= 1e-15);
  }

  SECTION("global phase is removed") {
    const Dephased d = dephase(scaled(f, std::polar(1.0, 0.37)));
    CHECK(max_abs_diff(d.matrix, f) <= 1e-14);
  }

  SECTION("witness reproduces the dephased matrix") {
    std::mt19937_64 rng(7);
    const UnitMatrix m = apply_equivalence(family_h(0.4, -0.9), testing::random_witness(6, rng));
    const Dephased d = dephase(m);
    CHECK(max_abs_diff(apply_equivalence(m, d.witness), d.matrix) == 0.0);
    for (std::size_t k = 0; k < 6; ++k) {
      CHECK(std::abs(d.matrix(0, k) - 1.0) <= 1e-15);
      CHECK(std::abs(d.matrix(k, 0) - 1.0) <= 1e-15);
    }
  }

  SECTION("near-zero entries are rejected") {
    UnitMatrix m = f;
    m(3, 0) = 0.1;
    CHECK_THROWS_MATCHES(dephase(m), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.kind() == ErrorKind::NearZeroEntry;
                         }));
  }
}

TEST_CASE("dephase is idempotent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const UnitMatrix m = apply_equivalence(family_h(testing::random_point(rng)), testing::random_witness(6, rng));
    const UnitMatrix once = dephase(m).matrix;
    CHECK(max_abs_diff(dephase(once).matrix, once) <= 1e-14);
  }
}

TEST_CASE("apply_equivalence") {
  const UnitMatrix h = family_h(0.3, 0.2);

  SECTION("identity witness") { CHECK(apply_equivalence(h, EquivalenceWitness::identity(6)) == h); }

  SECTION("dimension mismatch") {
    CHECK_THROWS_AS(apply_equivalence(h, EquivalenceWitness::identity(5)), Error);
    auto w = EquivalenceWitness::identity(6);
    w.rowPerm[0] = 1;  // not a permutation
    CHECK_THROWS_AS(apply_equivalence(h, w), Error);
  }

  SECTION("swapping rows 3<->5 and 4<->6 realizes the flipped sign pattern") {
    auto w = EquivalenceWitness::identity(6);
    w.rowPerm = swap_permutation(6, {{2, 4}, {3, 5}});
    const ParamPoint p{0.3, 0.2};
    // Row swaps exchange a and b, which flips every sign.
    const UnitMatrix flipped = assemble_h(p, solve_ab(p, {-1, -1, 1, 1}));
    CHECK(max_abs_diff(apply_equivalence(h, w), flipped) <= 1e-14);
  }

  SECTION("composition of witnesses") {
    std::mt19937_64 rng(3);
    const auto w1 = testing::random_witness(6, rng);
    const auto w2 = testing::random_witness(6, rng);
    CHECK(max_abs_diff(apply_equivalence(apply_equivalence(h, w1), w2), apply_equivalence(h, compose(w1, w2))) <=
          1e-14);
  }
}

TEST_CASE("Hadamard property survives equivalence transforms") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const UnitMatrix h = family_h(testing::random_point(rng));
    const UnitMatrix g = apply_equivalence(h, testing::random_witness(6, rng));
    CHECK(is_hadamard(h, 1e-12) == is_hadamard(g, 1e-12 + 1e-14));
    UnitMatrix broken = h;
    broken(2, 3) *= 1.01;
    CHECK(is_hadamard(broken, 1e-12) == is_hadamard(apply_equivalence(broken, testing::random_witness(6, rng)),
                                                    1e-12 + 1e-14));
  }
}

TEST_CASE("dagger and transpose") {
  const UnitMatrix f = fourier_f6(0, 0);
  CHECK(max_abs_diff(transpose(f), f) <= 1e-15);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const UnitMatrix h = family_h(testing::random_point(rng));
    CHECK(dagger(dagger(h)) == h);
    CHECK(transpose(transpose(h)) == h);
    const double u = unitarity_defect(h);
    CHECK(std::abs(unitarity_defect(dagger(h)) - u) <= 1e-14);
    CHECK(std::abs(unitarity_defect(transpose(h)) - u) <= 1e-14);
  }
}

TEST_CASE("fingerprint of F6(0,0) holds only multiples of pi/3") {
  const UnitMatrix f = fourier_f6(0, 0);
  // Brute force over all 225 quadruples, independent of the library's loop.
  int count = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t k = i + 1; k < 6; ++k)
      for (std::size_t j = 0; j < 6; ++j)
        for (std::size_t l = j + 1; l < 6; ++l) {
          const double phase = std::arg(f(i, j) * f(k, l) * std::conj(f(i, l)) * std::conj(f(k, j)));
          const double steps = phase / (kPi / 3);
          CHECK(std::abs(steps - std::round(steps)) <= 1e-12);
          ++count;
        }
  CHECK(count == 225);

  const Fingerprint fp = fingerprint(f, 8);
  REQUIRE(fp.values.size() == 225);
  for (double v : fp.values) {
    const double steps = v / (kPi / 3);
    CHECK(std::abs(steps - std::round(steps)) <= 1e-8);
  }
}

TEST_CASE("fingerprint separates F6 from D6") {
  const Fingerprint f = fingerprint(fourier_f6(0, 0));
  const Fingerprint d = fingerprint(dita_d6(0));
  CHECK_FALSE(f == d);
  // D6(0) has entries in {+-1, +-i}, so every phase is a multiple of pi/2.
  for (double v : d.values) {
    const double steps = v / (kPi / 2);
    CHECK(std::abs(steps - std::round(steps)) <= 1e-8);
  }
}

TEST_CASE("fingerprint invariance under random witnesses") {
  std::mt19937_64 rng(2024);
  for (int member = 0; member < 10; ++member) {
    const UnitMatrix h = family_h(testing::random_point(rng));
    const Fingerprint base = fingerprint(h, 8);
    for (int trial = 0; trial < 200; ++trial) {
      const Fingerprint moved = fingerprint(apply_equivalence(h, testing::random_witness(6, rng)), 8);
      REQUIRE(moved == base);
    }
  }
}

TEST_CASE("fingerprint rejects non-Hadamard input") {
  CHECK_THROWS_AS(fingerprint(UnitMatrix(6)), Error);
}

TEST_CASE("matrix JSON round trip") {
  const UnitMatrix h = family_h(0.3, 0.2);
  CHECK(io::matrix_from_json(io::to_json(h)) == h);

  const auto j = io::json::parse(R"({"n": 2, "phase_turns": [[0, 0], [0, 0.5]]})");
  const UnitMatrix m = io::matrix_from_json(j);
  CHECK(std::abs(m(1, 1) + 1.0) <= 1e-15);
  CHECK(is_hadamard(m));

  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"n": 2, "re": [[1, 1]]})")), Error);
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"re": [[1]]})")), Error);
}
