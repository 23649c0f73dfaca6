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

#include "twolevel/qgate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "twolevel/errors.hpp"

namespace twolevel {

namespace {

constexpr double kGateTol = 1e-13;

void check_row(std::size_t r, std::size_t n) {
  if (r < 1 || r > (std::size_t{1} << n)) {
    throw DimensionError("row " + std::to_string(r) + " outside 1.." +
                         std::to_string(std::size_t{1} << n));
  }
}

}  // namespace

std::uint64_t ControlledGate::base_index() const {
  std::uint64_t x = 0;
  for (const auto& c : controls)
    if (c.value) x |= std::uint64_t{1} << (n - c.qubit);
  return x;
}

void validate_gate_structure(const ControlledGate& g) {
  if (g.n < 1 || g.n > 63) throw DomainError("gate qubit count out of range");
  if (g.target < 1 || g.target > g.n) throw DomainError("gate target outside 1..n");
  if (g.controls.size() != g.n - 1) {
    throw DomainError("gate needs " + std::to_string(g.n - 1) + " controls, has " +
                      std::to_string(g.controls.size()));
  }
  std::vector<bool> seen(g.n + 1, false);
  seen[g.target] = true;
  for (const auto& c : g.controls) {
    if (c.qubit < 1 || c.qubit > g.n || seen[c.qubit]) {
      throw DomainError("control on qubit " + std::to_string(c.qubit) +
                        " is out of range or repeated");
    }
    if (c.value != 0 && c.value != 1) throw DomainError("control value must be 0 or 1");
    seen[c.qubit] = true;
  }
}

void validate_gate(const ControlledGate& g) {
  validate_gate_structure(g);
  if (unitarity_error(g.v.to_matrix()) > kGateTol) throw DomainError("gate V is not unitary");
}

ControlledGate factor_to_gate(const TwoLevelFactor& f, std::size_t n) {
  check_row(f.rows[0], n);
  check_row(f.rows[1], n);
  const std::uint64_t x = f.rows[0] - 1;
  const std::uint64_t y = f.rows[1] - 1;
  const std::uint64_t diff = x ^ y;
  if (std::popcount(diff) != 1) {
    throw NotControlledGateError("rows " + std::to_string(f.rows[0]) + " and " +
                                 std::to_string(f.rows[1]) + " (labels " +
                                 BitString(n, x).to_string() + ", " + BitString(n, y).to_string() +
                                 ") differ in " + std::to_string(std::popcount(diff)) + " bits");
  }
  ControlledGate g;
  g.n = n;
  g.target = n - static_cast<std::size_t>(std::countr_zero(diff));
  for (std::size_t q = 1; q <= n; ++q) {
    if (q == g.target) continue;
    g.controls.push_back({q, static_cast<int>((x >> (n - q)) & 1U)});
  }
  g.v = (x & diff) ? f.block.swapped() : f.block;
  return g;
}

TwoLevelFactor gate_to_factor(const ControlledGate& g, std::span<const std::size_t> order) {
  const std::size_t r0 = static_cast<std::size_t>(g.base_index()) + 1;
  const std::size_t r1 = static_cast<std::size_t>(g.base_index() | g.target_mask()) + 1;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const bool forward = order[k] == r0 && order[k + 1] == r1;
    const bool backward = order[k] == r1 && order[k + 1] == r0;
    if (!forward && !backward) continue;
    TwoLevelFactor f;
    f.type = k + 1;
    f.rows = {order[k], order[k + 1]};
    f.block = forward ? g.v : g.v.swapped();
    f.det = f.block.det();
    return f;
  }
  throw DomainError("rows " + std::to_string(r0) + ", " + std::to_string(r1) +
                    " are not adjacent in the ordering");
}

TwoLevelFactor gate_to_factor(const ControlledGate& g) {
  const auto gray = gray_to_permutation(gray_code(g.n));
  const auto order = gray.values();
  const std::size_t r0 = static_cast<std::size_t>(g.base_index()) + 1;
  const std::size_t r1 = static_cast<std::size_t>(g.base_index() | g.target_mask()) + 1;
  const auto p0 = std::find(order.begin(), order.end(), r0) - order.begin();
  const auto p1 = std::find(order.begin(), order.end(), r1) - order.begin();
  if (p0 - p1 == 1 || p1 - p0 == 1) return gate_to_factor(g, order);
  TwoLevelFactor f;
  f.rows = {r0, r1};
  f.block = g.v;
  f.det = f.block.det();
  return f;
}

std::size_t qubits_for_dimension(std::size_t d) {
  if (d < 2 || !std::has_single_bit(d)) {
    throw DomainError("dimension " + std::to_string(d) + " is not 2^n for n >= 1");
  }
  return static_cast<std::size_t>(std::countr_zero(d));
}

Circuit circuit_from_decomposition(const Decomposition& dec, std::size_t n) {
  Circuit c;
  c.n = n;
  c.gates.reserve(dec.factors.size());
  for (const auto& f : dec.factors) c.gates.push_back(factor_to_gate(f, n));
  return c;
}

Circuit synthesize_circuit(const UnitaryMatrix& u) {
  const std::size_t n = qubits_for_dimension(u.dim());
  const auto dec = decompose(u, gray_to_permutation(gray_code(n)));
  return circuit_from_decomposition(dec, n);
}

std::vector<GateClass> gate_classes(const Circuit& c) {
  std::vector<GateClass> classes;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> index;
  for (const auto& g : c.gates) {
    const std::uint64_t lo = g.base_index();
    const std::uint64_t hi = lo | g.target_mask();
    auto [it, inserted] = index.try_emplace({lo, hi}, classes.size());
    if (inserted) classes.push_back({{BitString(c.n, lo), BitString(c.n, hi)}, 0});
    ++classes[it->second].count;
  }
  return classes;
}

std::vector<Complex> apply_circuit(const Circuit& c, std::span<const Complex> state) {
  const std::size_t dim = std::size_t{1} << c.n;
  if (state.size() != dim) {
    throw DimensionError("state of length " + std::to_string(state.size()) + " for " +
                         std::to_string(c.n) + " qubits");
  }
  std::vector<Complex> psi(state.begin(), state.end());
  // A fully controlled gate mixes exactly one pair of amplitudes.
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    const std::size_t i = static_cast<std::size_t>(it->base_index());
    const std::size_t j = i | static_cast<std::size_t>(it->target_mask());
    const Complex x = psi[i];
    const Complex y = psi[j];
    psi[i] = it->v.m00 * x + it->v.m01 * y;
    psi[j] = it->v.m10 * x + it->v.m11 * y;
  }
  return psi;
}

Matrix gate_matrix(const ControlledGate& g) {
  const std::size_t dim = std::size_t{1} << g.n;
  const std::size_t r0 = static_cast<std::size_t>(g.base_index());
  const std::size_t r1 = r0 | static_cast<std::size_t>(g.target_mask());
  Matrix m = Matrix::identity(dim);
  m(r0, r0) = g.v.m00;
  m(r0, r1) = g.v.m01;
  m(r1, r0) = g.v.m10;
  m(r1, r1) = g.v.m11;
  return m;
}

Matrix circuit_matrix(const Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.n;
  Matrix m = Matrix::identity(dim);
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    const std::size_t r0 = static_cast<std::size_t>(it->base_index());
    const std::size_t r1 = r0 | static_cast<std::size_t>(it->target_mask());
    for (std::size_t col = 0; col < dim; ++col) {
      const Complex x = m(r0, col);
      const Complex y = m(r1, col);
      m(r0, col) = it->v.m00 * x + it->v.m01 * y;
      m(r1, col) = it->v.m10 * x + it->v.m11 * y;
    }
  }
  return m;
}

CircuitReport verify_circuit(const Matrix& u, const Circuit& c, std::optional<double> tol) {
  CircuitReport r;
  r.dims_ok = u.is_square() && c.n >= 1 && c.n <= 30 && u.rows() == (std::size_t{1} << c.n);
  if (!r.dims_ok) return r;
  const std::size_t dim = u.rows();
  r.residual_tol = tol.value_or(1e-10 * static_cast<double>(dim));
  r.gate_count = c.gates.size();
  r.gate_bound = dim / 2 * (dim - 1);
  r.class_bound = dim - 1;

  r.gates_ok = true;
  for (const auto& g : c.gates) {
    try {
      validate_gate(g);
    } catch (const DomainError&) {
      r.gates_ok = false;
    }
    if (g.n != c.n) r.gates_ok = false;
    r.max_unitarity_error = std::max(r.max_unitarity_error, unitarity_error(g.v.to_matrix()));
  }
  if (!r.gates_ok) return r;

  r.class_count = gate_classes(c).size();
  r.counts_ok = r.gate_count <= r.gate_bound && r.class_count <= r.class_bound;
  r.residual = frobenius_distance(u, circuit_matrix(c));
  r.residual_ok = r.residual <= r.residual_tol;
  return r;
}

std::string render_gate(const ControlledGate& g) {
  std::string s = "C(";
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    if (i) s += ',';
    s += 'q' + std::to_string(g.controls[i].qubit) + '=' + std::to_string(g.controls[i].value);
  }
  s += ") V@q" + std::to_string(g.target);
  return s;
}

}  // namespace twolevel
