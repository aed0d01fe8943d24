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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hadamard6/compose.hpp"
#include "hadamard6/equivalence.hpp"
#include "hadamard6/fingerprint.hpp"
#include "hadamard6/matrix.hpp"
#include "hadamard6/search.hpp"

// JSON encodings shared by the CLI:
//   matrix       {"n": 6, "re": [[...]], "im": [[...]]}
//                or {"n": 6, "phase_turns": [[...]]} with entries exp(2 pi i t)
//   witness      {"row_perm": [...], "row_phases": [[re, im], ...], "col_perm": [...], "col_phases": [...]}
//   compose spec {"h1": {"family": "h", "params": [x1, x2]}, "h2": {...}, "deltas": [d1, ..., d5]}
// Permutation indices are 0-based.

namespace hadamard6::io {

using json = nlohmann::json;

inline json to_json(const UnitMatrix& m) {
  const std::size_t n = m.order();
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json r = json::array();
    json c = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  return {{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

namespace detail {

inline std::vector<std::vector<double>> read_grid(const json& j, const char* key, std::size_t n) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != n)
    throw Error(ErrorKind::ParseError, std::string("'") + key + "' must be an array of " + std::to_string(n) + " rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : j[key]) {
    if (!row.is_array() || row.size() != n)
      throw Error(ErrorKind::ParseError, std::string("'") + key + "' rows must have " + std::to_string(n) + " entries");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw Error(ErrorKind::ParseError, std::string("'") + key + "' entries must be numbers");
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace detail

inline UnitMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw Error(ErrorKind::ParseError, "matrix JSON needs a positive integer 'n'");
  const auto n = j["n"].get<std::size_t>();
  std::vector<cplx> entries;
  entries.reserve(n * n);
  if (j.contains("re") || j.contains("im")) {
    const auto re = detail::read_grid(j, "re", n);
    const auto im = detail::read_grid(j, "im", n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) entries.emplace_back(re[i][k], im[i][k]);
  } else if (j.contains("phase_turns")) {
    const auto turns = detail::read_grid(j, "phase_turns", n);
    for (const auto& row : turns)
      for (double t : row) entries.push_back(std::polar(1.0, 2.0 * kPi * t));
  } else {
    throw Error(ErrorKind::ParseError, "matrix JSON needs 're'/'im' or 'phase_turns'");
  }
  return UnitMatrix(n, std::move(entries));
}

inline json phases_to_json(const std::vector<cplx>& phases) {
  json out = json::array();
  for (const cplx& v : phases) out.push_back({v.real(), v.imag()});
  return out;
}

inline json to_json(const EquivalenceWitness& w) {
  return {{"row_perm", w.rowPerm},
          {"row_phases", phases_to_json(w.rowPhases)},
          {"col_perm", w.colPerm},
          {"col_phases", phases_to_json(w.colPhases)}};
}

inline EquivalenceWitness witness_from_json(const json& j) {
  try {
    EquivalenceWitness w;
    w.rowPerm = j.at("row_perm").get<Permutation>();
    w.colPerm = j.at("col_perm").get<Permutation>();
    for (const auto& p : j.at("row_phases")) w.rowPhases.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    for (const auto& p : j.at("col_phases")) w.colPhases.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    return w;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad witness JSON: ") + e.what());
  }
}

inline json to_json(const EquivalenceResult& r) {
  json out{{"decision", std::string(to_string(r.decision))}};
  out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  out["screened_by"] = r.screenedBy ? json(*r.screenedBy) : json(nullptr);
  return out;
}

inline json to_json(const Fingerprint& fp) { return {{"precision", fp.precision}, {"values", fp.values}}; }

inline json to_json(const Classification& c) {
  json out{{"label", std::string(to_string(c.label))}, {"params", c.params}, {"exact", c.exact}};
  out["distance"] = std::isfinite(c.fingerprintDistance) ? json(c.fingerprintDistance) : json(nullptr);
  return out;
}

inline json to_json(const SearchResult& r) {
  return {{"matrix", to_json(r.matrix)},
          {"iterations", r.iterations},
          {"initial_defect", r.initialDefect},
          {"final_defect", r.finalDefect},
          {"converged", r.status == SearchStatus::Converged}};
}

inline FamilyMember member_from_json(const json& j) {
  try {
    FamilyMember m;
    m.family = family_selector_from_string(j.at("family").get<std::string>());
    const auto params = j.at("params").get<std::vector<double>>();
    if (params.size() != 2) throw Error(ErrorKind::ParseError, "family member needs two params");
    m.p1 = params[0];
    m.p2 = params[1];
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad family member JSON: ") + e.what());
  }
}

inline ComposeSpec compose_spec_from_json(const json& j) {
  try {
    ComposeSpec spec;
    spec.h1 = member_from_json(j.at("h1"));
    spec.h2 = member_from_json(j.at("h2"));
    const auto deltas = j.value("deltas", std::vector<double>(5, 0.0));
    if (deltas.size() != 5) throw Error(ErrorKind::ParseError, "'deltas' needs exactly 5 phases");
    std::copy(deltas.begin(), deltas.end(), spec.deltas.begin());
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad compose spec JSON: ") + e.what());
  }
}

inline json to_json(const ComposeSpec& spec) {
  auto member = [](const FamilyMember& m) {
    return json{{"family", std::string(to_string(m.family))}, {"params", {m.p1, m.p2}}};
  };
  return {{"h1", member(spec.h1)}, {"h2", member(spec.h2)}, {"deltas", spec.deltas}};
}

}  // namespace hadamard6::io
