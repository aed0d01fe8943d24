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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hadamard6/hadamard6.hpp"

namespace hadamard6::cli {

using json = nlohmann::json;

inline double default_tolerance() {
  if (const char* env = std::getenv("HADAMARD_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return kDefaultTol;
}

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Order-6 complex Hadamard matrix toolkit", "hadamard6"};
    app.require_subcommand(1);
    const double tol_default = default_tolerance();

    bool turns = false;
    app.add_flag("--turns", turns, "Read angles as fractions of a full turn instead of radians");

    std::string family = "h";
    double x1 = 0, x2 = 0, a = 0, b = 0, c = 0, x = 0;
    std::string out_path;
    auto* gen = app.add_subcommand("gen", "Construct a family member");
    gen->add_option("--family", family, "f6 | f6t | d6 | h | sym | selfadj | corner | border-x1 | border-x2")
        ->required();
    gen->add_option("--x1", x1);
    gen->add_option("--x2", x2);
    gen->add_option("--a", a);
    gen->add_option("--b", b);
    gen->add_option("--c", c);
    gen->add_option("--x", x);
    gen->add_option("--out", out_path);
    gen->fallthrough();

    std::string in_path;
    double tol = tol_default;
    auto* verify = app.add_subcommand("verify", "Report modulus and unitarity defects");
    verify->add_option("--in", in_path, "Matrix JSON file, '-' for stdin")->required();
    verify->add_option("--tol", tol);

    auto* deph = app.add_subcommand("dephase", "Dephase a matrix and report the witness");
    deph->add_option("--in", in_path)->required();
    deph->add_option("--out", out_path);

    std::string a_path, b_path;
    bool no_screen = false;
    int precision = kDefaultFingerprintPrecision;
    auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two matrices");
    equiv->add_option("--a", a_path)->required();
    equiv->add_option("--b", b_path)->required();
    equiv->add_option("--tol", tol);
    equiv->add_option("--precision", precision);
    equiv->add_flag("--no-screen", no_screen, "Skip the fingerprint screen and search exhaustively");

    auto* fp = app.add_subcommand("fingerprint", "Haagerup phase fingerprint");
    fp->add_option("--in", in_path)->required();
    fp->add_option("--precision", precision);

    int grid = 33;
    auto* scan = app.add_subcommand("scan", "Defects over a parameter grid as CSV");
    scan->add_option("--family", family, "h | f6 | f6t");
    scan->add_option("--grid", grid)->check(CLI::Range(1, 100000));
    scan->add_option("--out", out_path);

    std::uint64_t seed = 0;
    double search_tol = 1e-8;
    int max_iter = 2000;
    int runs = 1;
    bool no_classify = false;
    auto* search = app.add_subcommand("search", "Alternating-projection search plus classification");
    search->add_option("--seed", seed, "RNG seed");
    search->add_option("--tol", search_tol);
    search->add_option("--max-iter", max_iter)->check(CLI::PositiveNumber);
    search->add_option("--runs", runs)->check(CLI::PositiveNumber);
    search->add_option("--in", in_path, "Optional starting matrix");
    search->add_option("--grid", grid)->check(CLI::Range(2, 100000));
    search->add_flag("--no-classify", no_classify);
    search->add_option("--out", out_path);

    auto* cls = app.add_subcommand("classify", "Match a matrix against the known families");
    cls->add_option("--in", in_path)->required();
    cls->add_option("--grid", grid)->check(CLI::Range(2, 100000));

    std::string spec_path;
    auto* comp = app.add_subcommand("compose12", "Order-12 block construction from a ComposeSpec");
    comp->add_option("--spec", spec_path, "ComposeSpec JSON file, '-' for stdin")->required();
    comp->add_option("--out", out_path);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? 0 : 2;
    }

    const double angle_scale = turns ? 2.0 * kPi : 1.0;
    try {
      if (*gen) {
        emit(io::to_json(generate(family, x1 * angle_scale, x2 * angle_scale, a * angle_scale,
                                  b * angle_scale, c * angle_scale, x * angle_scale)),
             out_path);
      } else if (*verify) {
        const UnitMatrix m = load_matrix(in_path);
        const double md = modulus_defect(m);
        const double ud = unitarity_defect(m);
        emit({{"modulus_defect", md}, {"unitarity_defect", ud}, {"hadamard", md <= tol && ud <= tol}}, "");
      } else if (*deph) {
        const Dephased d = dephase(load_matrix(in_path));
        emit({{"matrix", io::to_json(d.matrix)}, {"witness", io::to_json(d.witness)}}, out_path);
      } else if (*equiv) {
        const EquivalenceOptions opts{tol, !no_screen, precision};
        emit(io::to_json(are_equivalent(load_matrix(a_path), load_matrix(b_path), opts)), "");
      } else if (*fp) {
        emit(io::to_json(fingerprint(load_matrix(in_path), precision)), "");
      } else if (*scan) {
        run_scan(family, grid, out_path);
      } else if (*search) {
        return run_search(seed, search_tol, max_iter, runs, in_path, grid, !no_classify, out_path);
      } else if (*cls) {
        emit(io::to_json(classify(load_matrix(in_path), grid)), "");
      } else if (*comp) {
        const ComposeSpec spec = io::compose_spec_from_json(load_json(spec_path));
        emit(io::to_json(compose12(spec)), out_path);
      }
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return 1;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return 1;
    }
    return 0;
  }

 private:
  static UnitMatrix generate(const std::string& family, double x1, double x2, double a, double b, double c,
                             double x) {
    if (family == "f6") return fourier_f6(a, b);
    if (family == "f6t") return fourier_f6t(a, b);
    if (family == "d6") return dita_d6(c);
    if (family == "h") return family_h(x1, x2);
    if (family == "sym") return symmetric_m(x);
    if (family == "selfadj") return self_adjoint_h(x);
    if (family == "corner") return dita_corner(x);
    if (family == "border-x2") return border_h(Border::X2AtHalfPi, x);
    if (family == "border-x1") return border_h(Border::X1AtHalfPi, x);
    throw Error(ErrorKind::UnknownFamily, "unknown family '" + family + "'");
  }

  json load_json(const std::string& path) {
    try {
      if (path == "-") return json::parse(in_);
      std::ifstream f(path);
      if (!f) throw std::runtime_error("cannot open '" + path + "'");
      return json::parse(f);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }

  UnitMatrix load_matrix(const std::string& path) { return io::matrix_from_json(load_json(path)); }

  void emit(const json& j, const std::string& path) { write_text(j.dump(2) + "\n", path); }

  void write_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
  }

  void run_scan(const std::string& family, int grid, const std::string& path) {
    std::function<UnitMatrix(double, double)> build;
    double lo = -kPi / 2;
    double span = kPi;
    if (family == "h") {
      build = [](double p, double q) { return family_h(p, q); };
    } else if (family == "f6" || family == "f6t") {
      lo = -kPi;
      span = 2 * kPi;
      build = family == "f6" ? std::function<UnitMatrix(double, double)>(fourier_f6) : fourier_f6t;
    } else {
      throw Error(ErrorKind::UnknownFamily, "scan supports h, f6 and f6t");
    }
    std::ostringstream csv;
    csv << "x1,x2,modulus_defect,unitarity_defect\n";
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        const double p = lo + span * (i + 1) / grid;
        const double q = lo + span * (j + 1) / grid;
        double md = std::nan("");
        double ud = std::nan("");
        try {
          const UnitMatrix m = build(p, q);
          md = modulus_defect(m);
          ud = unitarity_defect(m);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SingularZ) throw;
        }
        csv << format_double(p) << ',' << format_double(q) << ',' << format_double(md) << ','
            << format_double(ud) << '\n';
      }
    }
    write_text(csv.str(), path);
  }

  int run_search(std::uint64_t seed, double tol, int max_iter, int runs, const std::string& in_path, int grid,
                 bool with_classification, const std::string& path) {
    std::optional<UnitMatrix> start;
    if (!in_path.empty()) start = load_matrix(in_path);
    json results = json::array();
    bool all_converged = true;
    for (int r = 0; r < runs; ++r) {
      SearchConfig cfg;
      cfg.maxIter = max_iter;
      cfg.tol = tol;
      cfg.seed = start;
      cfg.rngSeed = seed + static_cast<std::uint64_t>(r);
      const SearchResult res = project_search(cfg);
      json entry = io::to_json(res);
      entry["rng_seed"] = cfg.rngSeed;
      if (res.status == SearchStatus::Converged) {
        if (with_classification && res.matrix.order() == 6)
          entry["classification"] = io::to_json(classify(res.matrix, grid));
      } else {
        all_converged = false;
      }
      results.push_back(std::move(entry));
    }
    emit(runs == 1 ? results[0] : results, path);
    if (!all_converged) {
      err_ << "error: " << to_string(ErrorKind::MaxIterExceeded) << ": defect above tolerance after "
           << max_iter << " iterations\n";
      return 1;
    }
    return 0;
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

inline int run(const std::vector<std::string>& args, std::istream& in = std::cin, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  return Runner(in, out, err).run(args);
}

}  // namespace hadamard6::cli
