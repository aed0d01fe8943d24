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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "test_support.hpp"

using namespace hadamard6;
using json = nlohmann::json;

namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hadamard6_cli_test_" + name);
}

void write_file(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("gen emits matrix JSON") {
  const auto r = run_cli({"gen", "--family", "f6", "--a", "0", "--b", "0"});
  REQUIRE(r.code == 0);
  const UnitMatrix m = io::matrix_from_json(json::parse(r.out));
  CHECK(max_abs_diff(m, fourier_f6(0, 0)) == 0.0);

  const auto h = run_cli({"gen", "--family", "h", "--x1", "0.3", "--x2", "0.2"});
  REQUIRE(h.code == 0);
  CHECK(max_abs_diff(io::matrix_from_json(json::parse(h.out)), family_h(0.3, 0.2)) == 0.0);
}

TEST_CASE("angles in turns") {
  const auto r = run_cli({"--turns", "gen", "--family", "h", "--x1", "0.125", "--x2", "0"});
  REQUIRE(r.code == 0);
  CHECK(max_abs_diff(io::matrix_from_json(json::parse(r.out)), family_h(kPi / 4, 0)) <= 1e-15);
  const auto s = run_cli({"gen", "--family", "d6", "--c", "0.125", "--turns"});
  REQUIRE(s.code == 0);
  CHECK(max_abs_diff(io::matrix_from_json(json::parse(s.out)), dita_d6(kPi / 4)) <= 1e-15);
}

TEST_CASE("gen output verifies as Hadamard") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 5; ++k) {
    const ParamPoint p = testing::random_point(rng);
    const auto g = run_cli({"gen", "--family", "h", "--x1", std::to_string(p.x1), "--x2", std::to_string(p.x2)});
    REQUIRE(g.code == 0);
    const auto v = run_cli({"verify", "--in", "-"}, g.out);
    REQUIRE(v.code == 0);
    const json j = json::parse(v.out);
    CHECK(j["hadamard"].get<bool>());
    CHECK(j["unitarity_defect"].get<double>() <= 1e-10);
  }
}

TEST_CASE("verify reports non-Hadamard input") {
  const auto v = run_cli({"verify", "--in", "-"}, R"({"n": 2, "re": [[1, 1], [1, 1]], "im": [[0, 0], [0, 0]]})");
  REQUIRE(v.code == 0);
  const json j = json::parse(v.out);
  CHECK_FALSE(j["hadamard"].get<bool>());
  CHECK(j["unitarity_defect"].get<double>() == Catch::Approx(1.0));
}

TEST_CASE("equiv on a random witness image") {
  std::mt19937_64 rng(6);
  const UnitMatrix h = family_h(0.3, 0.2);
  const UnitMatrix g = apply_equivalence(h, testing::random_witness(6, rng));
  const auto pa = temp_file("a.json");
  const auto pb = temp_file("b.json");
  write_file(pa, io::to_json(h).dump());
  write_file(pb, io::to_json(g).dump());

  const auto r = run_cli({"equiv", "--a", pa.string(), "--b", pb.string()});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["decision"] == "equivalent");
  const EquivalenceWitness w = io::witness_from_json(j["witness"]);
  CHECK(max_abs_diff(apply_equivalence(h, w), g) <= 1e-9);
}

TEST_CASE("equiv inequivalent pair") {
  const auto pa = temp_file("f6.json");
  const auto pb = temp_file("d6.json");
  write_file(pa, io::to_json(fourier_f6(0, 0)).dump());
  write_file(pb, io::to_json(dita_d6(0)).dump());
  const auto r = run_cli({"equiv", "--a", pa.string(), "--b", pb.string(), "--no-screen"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["decision"] == "inequivalent");
}

TEST_CASE("dephase and fingerprint verbs") {
  const std::string scaled_f6 = io::to_json(scaled(fourier_f6(0, 0), std::polar(1.0, 0.37))).dump();
  const auto d = run_cli({"dephase", "--in", "-"}, scaled_f6);
  REQUIRE(d.code == 0);
  CHECK(max_abs_diff(io::matrix_from_json(json::parse(d.out)["matrix"]), fourier_f6(0, 0)) <= 1e-14);

  const auto f = run_cli({"fingerprint", "--in", "-", "--precision", "6"}, scaled_f6);
  REQUIRE(f.code == 0);
  const json j = json::parse(f.out);
  CHECK(j["precision"] == 6);
  CHECK(j["values"].size() == 225);
}

TEST_CASE("scan writes one CSV row per grid point") {
  const auto path = temp_file("scan.csv");
  const auto r = run_cli({"scan", "--family", "h", "--grid", "33", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  CHECK(line == "x1,x2,modulus_defect,unitarity_defect");
  int rows = 0;
  int checked = 0;
  while (std::getline(f, line)) {
    ++rows;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 4);
    const double x1 = std::stod(cells[0]);
    const double x2 = std::stod(cells[1]);
    const double s = std::sin(x1) * std::sin(x2);
    if (std::abs(1 - s) < 1e-6 || std::abs(1 + s) < 1e-6) continue;
    CHECK(std::stod(cells[2]) <= 1e-10);
    CHECK(std::stod(cells[3]) <= 1e-10);
    ++checked;
  }
  CHECK(rows == 33 * 33);
  CHECK(checked == 33 * 33 - 1);
}

TEST_CASE("search is byte-identical for the same seed") {
  const auto a = run_cli({"search", "--seed", "42", "--tol", "1e-8", "--no-classify"});
  const auto b = run_cli({"search", "--seed", "42", "--tol", "1e-8", "--no-classify"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j["converged"].get<bool>());
  CHECK(is_hadamard(io::matrix_from_json(j["matrix"]), 1e-8));
}

TEST_CASE("search with classification sidecar") {
  const auto seed = temp_file("seed.json");
  write_file(seed, io::to_json(family_h(0.37, 0.21)).dump());
  const auto r = run_cli({"search", "--in", seed.string()});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["iterations"] == 0);
  CHECK(j["classification"]["label"] == "H-family");
}

TEST_CASE("classify verb") {
  const auto r = run_cli({"classify", "--in", "-"}, io::to_json(dita_d6(0.2)).dump());
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["label"] == "D6");
}

TEST_CASE("compose12 verb") {
  const std::string spec =
      R"({"h1": {"family": "h", "params": [0.3, 0.2]}, "h2": {"family": "f6t", "params": [0.1, 0.7]},
          "deltas": [0.1, 0.2, 0.3, 0.4, 0.5]})";
  const auto r = run_cli({"compose12", "--spec", "-"}, spec);
  REQUIRE(r.code == 0);
  const UnitMatrix m = io::matrix_from_json(json::parse(r.out));
  CHECK(m.order() == 12);
  CHECK(is_hadamard(m, 1e-10));

  const auto bad = run_cli({"compose12", "--spec", "-"}, R"({"h1": {"family": "x6", "params": [0, 0]},
      "h2": {"family": "h", "params": [0, 0]}})");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("UnknownFamily") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"gen"}).code == 2);

  const auto range = run_cli({"gen", "--family", "d6", "--c", "1.0"});
  CHECK(range.code == 1);
  CHECK(range.err.find("ParamOutOfRange") != std::string::npos);

  const auto singular = run_cli({"gen", "--family", "h", "--x1", "1.5707963267948966", "--x2", "1.5707963267948966"});
  CHECK(singular.code == 1);
  CHECK(singular.err.find("SingularZ") != std::string::npos);

  const auto not_h = run_cli({"fingerprint", "--in", "-"}, R"({"n": 2, "phase_turns": [[0, 0], [0, 0]]})");
  CHECK(not_h.code == 1);
  CHECK(not_h.err.find("NotHadamard") != std::string::npos);

  const auto bad_json = run_cli({"verify", "--in", "-"}, "{not json");
  CHECK(bad_json.code == 1);
  CHECK(bad_json.err.find("ParseError") != std::string::npos);

  const auto stuck = run_cli({"search", "--seed", "1", "--tol", "1e-15", "--max-iter", "1"});
  CHECK(stuck.code == 1);
  CHECK(stuck.err.find("MaxIterExceeded") != std::string::npos);
}
