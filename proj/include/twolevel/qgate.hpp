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

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twolevel/decomposition.hpp"
#include "twolevel/gray.hpp"
#include "twolevel/linalg.hpp"

namespace twolevel {

/// Qubits are numbered 1..n from the leftmost (most significant) character of the row label;
/// row r of a 2^n x 2^n matrix carries the label of r - 1.
struct Control {
  std::size_t qubit = 0;
  int value = 0;

  friend bool operator==(const Control&, const Control&) = default;
};

/// Fully controlled single-qubit gate C^{n-1}V. Row/column 0 of v is target value 0.
struct ControlledGate {
  std::size_t n = 0;
  std::size_t target = 0;
  std::vector<Control> controls;  // ascending qubit order, one per non-target qubit
  Mat2 v;

  /// Label with the target bit cleared (the row v[0][*] acts on), as a 0-based index.
  std::uint64_t base_index() const;
  /// Bit mask of the target qubit in a 0-based index.
  std::uint64_t target_mask() const { return std::uint64_t{1} << (n - target); }
};

/// Throws DomainError unless controls cover exactly the non-target qubits once each with
/// 0/1 values.
void validate_gate_structure(const ControlledGate& g);

/// validate_gate_structure, and v must be unitary within 1e-13.
void validate_gate(const ControlledGate& g);

/// Gates in product order: the circuit's matrix is G_1 G_2 ... G_m.
struct Circuit {
  std::size_t n = 0;
  std::vector<ControlledGate> gates;
};

/// Labels of a gate class, sorted by value; both differ in exactly the target bit.
struct GateClass {
  std::array<BitString, 2> labels;
  std::size_t count = 0;
};

/// Reads the factor as C^{n-1}V. Throws NotControlledGateError when the row labels do not
/// differ in exactly one bit, DimensionError when a row exceeds 2^n.
ControlledGate factor_to_gate(const TwoLevelFactor& f, std::size_t n);

/// Inverse of factor_to_gate relative to `order`: the gate's rows must be adjacent in
/// `order`, which fixes the factor's type and logical row orientation. Throws DomainError
/// when they are not.
TwoLevelFactor gate_to_factor(const ControlledGate& g, std::span<const std::size_t> order);

/// Same, relative to the Gray ordering of g.n qubits. Pairs that are not Gray-adjacent come
/// back as (target 0 row, target 1 row) with type 0.
TwoLevelFactor gate_to_factor(const ControlledGate& g);

/// Decomposes u over the Gray ordering and maps every factor to a gate.
/// Throws DomainError when the dimension is not a power of two.
Circuit synthesize_circuit(const UnitaryMatrix& u);

/// Maps every factor of a (possibly restricted) decomposition of a 2^n x 2^n matrix.
Circuit circuit_from_decomposition(const Decomposition& dec, std::size_t n);

/// Classes in order of first appearance.
std::vector<GateClass> gate_classes(const Circuit& c);

/// Applies the gates right to left (G_m first). Throws DimensionError on length mismatch.
std::vector<Complex> apply_circuit(const Circuit& c, std::span<const Complex> state);

Matrix gate_matrix(const ControlledGate& g);

/// G_1 G_2 ... G_m.
Matrix circuit_matrix(const Circuit& c);

struct CircuitReport {
  double residual = 0.0;  // ||U - G_1 ... G_m||_F
  double residual_tol = 0.0;
  std::size_t gate_count = 0;
  std::size_t gate_bound = 0;   // 2^{n-1} (2^n - 1)
  std::size_t class_count = 0;
  std::size_t class_bound = 0;  // 2^n - 1
  double max_unitarity_error = 0.0;

  bool dims_ok = true;
  bool residual_ok = false;
  bool gates_ok = false;  // every gate has n-1 controls and a unitary V
  bool counts_ok = false;

  bool passed() const { return dims_ok && residual_ok && gates_ok && counts_ok; }
};

/// Checks a circuit against u. `tol` overrides the residual tolerance (default 1e-10 * 2^n).
CircuitReport verify_circuit(const Matrix& u, const Circuit& c,
                             std::optional<double> tol = std::nullopt);

/// "C(q1=0,q3=1) V@q2".
std::string render_gate(const ControlledGate& g);

/// log2(d) when d is a positive power of two; throws DomainError otherwise.
std::size_t qubits_for_dimension(std::size_t d);

}  // namespace twolevel
