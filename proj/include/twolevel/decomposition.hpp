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
#include <vector>

#include "twolevel/linalg.hpp"

namespace twolevel {

/// Pivot pairs with sqrt(|a|^2 + |b|^2) at or below this are treated as already zero.
inline constexpr double kZeroTol = 1e-12;

/// Tolerance on ||U - F_1 ... F_N||_F for a d x d decomposition.
constexpr double reconstruction_tol(std::size_t d) { return 1e-10 * static_cast<double>(d); }

/// Elimination order P = (j_1, ..., j_d): a permutation of 1..d, stored 1-based.
class PermutationOrder {
 public:
  /// Throws DomainError unless `one_based` is a permutation of 1..size.
  explicit PermutationOrder(std::vector<std::size_t> one_based);

  static PermutationOrder identity(std::size_t d);

  std::size_t size() const { return p_.size(); }
  /// j_k for 1-based position k.
  std::size_t at(std::size_t k) const { return p_.at(k - 1); }
  std::span<const std::size_t> values() const { return p_; }

  friend bool operator==(const PermutationOrder&, const PermutationOrder&) = default;

 private:
  std::vector<std::size_t> p_;
};

/// One two-level factor. `rows` holds 1-based indices in the logical order of the
/// ordering that produced it, so block row/column 0 belongs to rows[0] even when
/// rows[0] > rows[1]. `type` is k when rows == (j_k, j_{k+1}); 0 means the factor is not
/// tied to an ordering (elimination plans).
struct TwoLevelFactor {
  std::size_t type = 0;
  std::array<std::size_t, 2> rows{};
  Mat2 block;
  Complex det{1.0};
};

/// I_d with the factor's block written at rows x rows.
Matrix embed(const TwoLevelFactor& f, std::size_t d);

/// True iff the block is within kZeroTol of I_2.
bool is_identity_factor(const TwoLevelFactor& f);

enum class PhaseMode { Auto, Prescribed };

/// Determinants mu_1..mu_N requested for the factors, consumed in schedule order.
struct PhasePrescription {
  std::vector<Complex> mus;
};

/// Checks N == d(d-1)/2, |mu_i| == 1 within 1e-10 and prod mu_i == det_u within 1e-8.
/// Throws PrescriptionError.
void validate_prescription(const PhasePrescription& p, std::size_t d, Complex det_u);

/// Ordered factor list with U == F_1 F_2 ... F_N.
struct Decomposition {
  std::size_t dim = 0;
  /// 1-based ordering the sweep ran over: a full permutation, or a subsequence for
  /// restricted decompositions.
  std::vector<std::size_t> order;
  PhaseMode mode = PhaseMode::Auto;
  std::vector<TwoLevelFactor> factors;
  double residual = 0.0;
  std::size_t nonidentity_count = 0;
};

/// (1/u) [[conj(a), conj(b)], [-conj(mu) b, conj(mu) a]] with u = hypot(|a|, |b|).
/// Maps (a, b)^T to (u, 0)^T and has determinant conj(mu). Throws DegeneratePivotError
/// when u <= kZeroTol and DomainError when |mu| differs from 1 by more than 1e-10.
Mat2 elimination_block(Complex a, Complex b, Complex mu);

/// diag(1, conj(mu)). Throws DomainError when |mu| differs from 1 by more than 1e-10.
Mat2 phase_block(Complex mu);

struct ScheduleEntry {
  std::size_t column_slot;  // k: the sweep is clearing column j_k
  std::size_t type;         // t: pivot rows (j_t, j_{t+1}), zeroing row j_{t+1}

  friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

/// (1, d-1), (1, d-2), ..., (1, 1), (2, d-1), ..., (2, 2), ..., (d-1, d-1).
/// Throws DomainError for d < 2.
std::vector<ScheduleEntry> sweep_schedule(std::size_t d);

/// Factors U over P. Auto mode uses determinant 1 everywhere except the final schedule
/// entry, which takes the leftover phase, and skips steps whose block would be I_2.
/// Throws DimensionError when P does not match U.
Decomposition decompose(const UnitaryMatrix& u, const PermutationOrder& p);

/// Prescribed mode: always emits d(d-1)/2 factors with det(F_i) == mus[i]; a phase block
/// stands in wherever the pivot pair is already zero. Throws PrescriptionError.
Decomposition decompose(const UnitaryMatrix& u, const PermutationOrder& p,
                        const PhasePrescription& mus);

/// F_1 F_2 ... F_N embedded in I_d. Throws DimensionError for indices outside 1..d.
Matrix reconstruct(std::span<const TwoLevelFactor> factors, std::size_t d);
Matrix reconstruct(const Decomposition& dec);

struct FactorCheck {
  double unitarity_error = 0.0;  // ||B^H B - I||_F
  double det_error = 0.0;        // |stored det - det(B)|
  bool structure_ok = true;      // rows == (j_type, j_type+1) of the ordering
};

struct VerificationReport {
  double residual = 0.0;
  double residual_tol = 0.0;
  std::vector<FactorCheck> factors;
  double max_unitarity_error = 0.0;
  double max_det_error = 0.0;
  double det_product_error = 0.0;  // |prod det(F_i) - det(U)|
  std::size_t factor_count = 0;
  std::size_t nonidentity_count = 0;
  std::size_t count_bound = 0;

  bool dims_ok = true;
  bool residual_ok = false;
  bool blocks_ok = false;
  bool dets_ok = false;
  bool det_product_ok = false;
  bool count_ok = false;
  bool structure_ok = false;

  bool passed() const {
    return dims_ok && residual_ok && blocks_ok && dets_ok && det_product_ok && count_ok &&
           structure_ok;
  }
};

/// Recomputes every Decomposition invariant from scratch against `u`. Never throws on a
/// bad decomposition; failures are carried in the report. `tol` overrides the residual
/// tolerance (default reconstruction_tol(d)).
VerificationReport verify(const Matrix& u, const Decomposition& dec,
                          std::optional<double> tol = std::nullopt);

/// Sorted 1-based indices i whose row or column differs from the identity's by more than tol.
std::vector<std::size_t> active_indices(const Matrix& u, double tol);

/// Runs the sweep over `sub_order` (distinct 1-based indices) only, auto phases.
/// Throws CoverageError when an active index of u is missing from sub_order.
Decomposition decompose_restricted(const UnitaryMatrix& u, std::span<const std::size_t> sub_order);

/// Zero the entry (zero_row, column) with a block on `rows`. zero_row defaults to rows[1];
/// when it equals rows[0] the pair is used in reverse. All indices 1-based.
struct EliminationStep {
  std::array<std::size_t, 2> rows{};
  std::size_t column = 0;
  std::optional<std::size_t> zero_row;
};

using EliminationPlan = std::vector<EliminationStep>;

struct PlanResult {
  std::vector<TwoLevelFactor> factors;  // product order: U == F_1 ... F_N * residual_matrix
  Matrix residual_matrix;
};

/// Applies a free-form elimination plan with auto phases (the last step takes the phase of
/// its 2x2 submatrix). Throws PlanError for malformed steps.
PlanResult apply_elimination_plan(const UnitaryMatrix& u, const EliminationPlan& plan);

}  // namespace twolevel
