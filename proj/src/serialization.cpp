// Copyright 2026 The twolevel Authors
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

#include "twolevel/serialization.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "twolevel/errors.hpp"

namespace twolevel {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("expected a complex number [re, im], got " + j.dump());
  }
  const Complex z{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ParseError("non-finite complex entry");
  return z;
}

json block_to_json(const Mat2& b) {
  return json::array({json::array({complex_to_json(b.m00), complex_to_json(b.m01)}),
                      json::array({complex_to_json(b.m10), complex_to_json(b.m11)})});
}

Mat2 block_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2) {
    throw ParseError("expected a 2x2 block");
  }
  return {complex_from_json(j[0][0]), complex_from_json(j[0][1]), complex_from_json(j[1][0]),
          complex_from_json(j[1][1])};
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t positive_int(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw ParseError(std::string(what) + " must be a positive integer");
  }
  return j.get<std::size_t>();
}

std::vector<std::size_t> index_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& e : j) out.push_back(positive_int(e, what));
  return out;
}

}  // namespace

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"d", m.rows()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
  const std::size_t d = positive_int(field(j, "d"), "matrix \"d\"");
  const json& rows = field(j, "entries");
  if (!rows.is_array() || rows.size() != d) throw ParseError("matrix needs d rows of entries");
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!rows[i].is_array() || rows[i].size() != d) {
      throw ParseError("matrix row " + std::to_string(i + 1) + " does not have d entries");
    }
    for (std::size_t k = 0; k < d; ++k) m(i, k) = complex_from_json(rows[i][k]);
  }
  return m;
}

json to_json(const Decomposition& dec) {
  json factors = json::array();
  for (const auto& f : dec.factors) {
    factors.push_back({{"type", f.type},
                       {"rows", json::array({f.rows[0], f.rows[1]})},
                       {"block", block_to_json(f.block)},
                       {"det", complex_to_json(f.det)}});
  }
  return {{"d", dec.dim},
          {"permutation", dec.order},
          {"factors", std::move(factors)},
          {"residual", dec.residual},
          {"mode", dec.mode == PhaseMode::Auto ? "auto" : "prescribed"}};
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition dec;
  dec.dim = positive_int(field(j, "d"), "decomposition \"d\"");
  dec.order = index_list(field(j, "permutation"), "permutation entry");
  const json& mode = field(j, "mode");
  if (mode == "auto") {
    dec.mode = PhaseMode::Auto;
  } else if (mode == "prescribed") {
    dec.mode = PhaseMode::Prescribed;
  } else {
    throw ParseError("mode must be \"auto\" or \"prescribed\"");
  }
  const json& residual = field(j, "residual");
  if (!residual.is_number()) throw ParseError("residual must be a number");
  dec.residual = residual.get<double>();

  const json& factors = field(j, "factors");
  if (!factors.is_array()) throw ParseError("factors must be an array");
  for (const auto& fj : factors) {
    TwoLevelFactor f;
    const json& type = field(fj, "type");
    if (!type.is_number_integer() || type.get<long long>() < 0) throw ParseError("factor type must be >= 0");
    f.type = type.get<std::size_t>();
    const auto rows = index_list(field(fj, "rows"), "factor row");
    if (rows.size() != 2) throw ParseError("factor rows must be a pair");
    f.rows = {rows[0], rows[1]};
    f.block = block_from_json(field(fj, "block"));
    f.det = complex_from_json(field(fj, "det"));
    dec.factors.push_back(f);
  }
  dec.nonidentity_count = static_cast<std::size_t>(
      std::count_if(dec.factors.begin(), dec.factors.end(),
                    [](const auto& f) { return !is_identity_factor(f); }));
  return dec;
}

json to_json(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates) {
    json controls = json::array();
    for (const auto& ctl : g.controls) controls.push_back({{"qubit", ctl.qubit}, {"value", ctl.value}});
    gates.push_back({{"target", g.target}, {"controls", std::move(controls)}, {"v", block_to_json(g.v)}});
  }
  return {{"n", c.n}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
  Circuit c;
  c.n = positive_int(field(j, "n"), "circuit \"n\"");
  if (c.n > 30) throw ParseError("circuit \"n\" too large");
  const json& gates = field(j, "gates");
  if (!gates.is_array()) throw ParseError("gates must be an array");
  for (const auto& gj : gates) {
    ControlledGate g;
    g.n = c.n;
    g.target = positive_int(field(gj, "target"), "gate target");
    const json& controls = field(gj, "controls");
    if (!controls.is_array()) throw ParseError("controls must be an array");
    for (const auto& cj : controls) {
      const json& value = field(cj, "value");
      if (!value.is_number_integer()) throw ParseError("control value must be 0 or 1");
      g.controls.push_back({positive_int(field(cj, "qubit"), "control qubit"), value.get<int>()});
    }
    g.v = block_from_json(field(gj, "v"));
    try {
      validate_gate_structure(g);
    } catch (const DomainError& e) {
      throw ParseError(std::string("invalid gate: ") + e.what());
    }
    c.gates.push_back(std::move(g));
  }
  return c;
}

json complex_array_to_json(std::span<const Complex> values) {
  json out = json::array();
  for (const Complex& z : values) out.push_back(complex_to_json(z));
  return out;
}

std::vector<Complex> complex_array_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace twolevel
