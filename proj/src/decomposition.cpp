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

#include "twolevel/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "twolevel/errors.hpp"

namespace twolevel {

namespace {

constexpr double kPhaseTol = 1e-10;
constexpr double kPrescriptionProductTol = 1e-8;
constexpr double kBlockTol = 1e-13;
constexpr double kDetProductTol = 1e-8;

void check_unit_modulus(Complex mu, const char* what) {
  if (!(std::abs(std::abs(mu) - 1.0) <= kPhaseTol)) {
    throw DomainError(std::string(what) + ": |mu| = " + std::to_string(std::abs(mu)) +
                      " is not 1");
  }
}

// w <- B * w restricted to rows r0, r1 (0-based).
void left_apply(Matrix& w, std::size_t r0, std::size_t r1, const Mat2& b) {
  for (std::size_t c = 0; c < w.cols(); ++c) {
    const Complex x = w(r0, c);
    const Complex y = w(r1, c);
    w(r0, c) = b.m00 * x + b.m01 * y;
    w(r1, c) = b.m10 * x + b.m11 * y;
  }
}

// Unit phase of the 2x2 principal submatrix on rows/cols (r0, r1); 1 if it is singular.
Complex submatrix_phase(const Matrix& w, std::size_t r0, std::size_t r1) {
  const Complex det = w(r0, r0) * w(r1, r1) - w(r0, r1) * w(r1, r0);
  const double mag = std::abs(det);
  return mag < 0.5 ? Complex{1.0} : det / mag;
}

TwoLevelFactor make_factor(std::size_t type, std::size_t row0, std::size_t row1,
                           const Mat2& applied) {
  TwoLevelFactor f;
  f.type = type;
  f.rows = {row0, row1};
  f.block = applied.adjoint();
  f.det = f.block.det();
  return f;
}

std::size_t count_nonidentity(std::span<const TwoLevelFactor> factors) {
  return static_cast<std::size_t>(std::count_if(
      factors.begin(), factors.end(), [](const auto& f) { return !is_identity_factor(f); }));
}

// The column sweep over `order`. Clears column j_1 bottom-up, then j_2, and so on; the
// working matrix w ends at the identity on the ordered indices.
std::vector<TwoLevelFactor> sweep(Matrix& w, std::span<const std::size_t> order,
                                  const PhasePrescription* mus) {
  std::vector<TwoLevelFactor> factors;
  if (order.size() < 2) return factors;
  const auto schedule = sweep_schedule(order.size());
  factors.reserve(schedule.size());

  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const auto [k, t] = schedule[i];
    const std::size_t col = order[k - 1] - 1;
    const std::size_t r0 = order[t - 1] - 1;
    const std::size_t r1 = order[t] - 1;
    const Complex a = w(r0, col);
    const Complex b = w(r1, col);
    const double u = std::hypot(std::abs(a), std::abs(b));

    Mat2 block;
    if (mus != nullptr) {
      const Complex mu = mus->mus[i];
      block = u <= kZeroTol ? phase_block(mu) : elimination_block(a, b, mu);
    } else {
      if (u <= kZeroTol) continue;
      const bool last = i + 1 == schedule.size();
      const Complex mu = last ? submatrix_phase(w, r0, r1) : Complex{1.0};
      block = elimination_block(a, b, mu);
      if (distance(block, Mat2::identity()) <= kZeroTol) continue;
    }
    left_apply(w, r0, r1, block);
    factors.push_back(make_factor(t, r0 + 1, r1 + 1, block));
  }
  return factors;
}

Decomposition finish(const UnitaryMatrix& u, std::vector<std::size_t> order, PhaseMode mode,
                     std::vector<TwoLevelFactor> factors) {
  Decomposition dec;
  dec.dim = u.dim();
  dec.order = std::move(order);
  dec.mode = mode;
  dec.factors = std::move(factors);
  dec.nonidentity_count = count_nonidentity(dec.factors);
  dec.residual = frobenius_distance(u.matrix(), reconstruct(dec));
  return dec;
}

void check_index(std::size_t i, std::size_t d, const char* what) {
  if (i < 1 || i > d) {
    throw DimensionError(std::string(what) + ": index " + std::to_string(i) +
                         " outside 1.." + std::to_string(d));
  }
}

}  // namespace

PermutationOrder::PermutationOrder(std::vector<std::size_t> one_based) : p_(std::move(one_based)) {
  const std::size_t d = p_.size();
  if (d == 0) throw DomainError("permutation must be non-empty");
  std::vector<bool> seen(d + 1, false);
  for (std::size_t j : p_) {
    if (j < 1 || j > d) {
      throw DomainError("permutation entry " + std::to_string(j) + " outside 1.." +
                        std::to_string(d));
    }
    if (seen[j]) throw DomainError("permutation repeats index " + std::to_string(j));
    seen[j] = true;
  }
}

PermutationOrder PermutationOrder::identity(std::size_t d) {
  std::vector<std::size_t> p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = i + 1;
  return PermutationOrder(std::move(p));
}

Matrix embed(const TwoLevelFactor& f, std::size_t d) {
  check_index(f.rows[0], d, "embed");
  check_index(f.rows[1], d, "embed");
  if (f.rows[0] == f.rows[1]) throw DimensionError("embed: factor rows coincide");
  Matrix m = Matrix::identity(d);
  const std::size_t r0 = f.rows[0] - 1;
  const std::size_t r1 = f.rows[1] - 1;
  m(r0, r0) = f.block.m00;
  m(r0, r1) = f.block.m01;
  m(r1, r0) = f.block.m10;
  m(r1, r1) = f.block.m11;
  return m;
}

bool is_identity_factor(const TwoLevelFactor& f) {
  return distance(f.block, Mat2::identity()) <= kZeroTol;
}

void validate_prescription(const PhasePrescription& p, std::size_t d, Complex det_u) {
  const std::size_t n = d * (d - 1) / 2;
  if (p.mus.size() != n) {
    throw PrescriptionError("prescription has " + std::to_string(p.mus.size()) +
                            " determinants, need d(d-1)/2 = " + std::to_string(n));
  }
  Complex product = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(std::abs(std::abs(p.mus[i]) - 1.0) <= kPhaseTol)) {
      throw PrescriptionError("prescribed determinant " + std::to_string(i + 1) +
                              " has modulus " + std::to_string(std::abs(p.mus[i])));
    }
    product *= p.mus[i];
  }
  const double off = std::abs(product - det_u);
  if (!(off <= kPrescriptionProductTol)) {
    throw PrescriptionError("product of prescribed determinants differs from det(U) by " +
                            std::to_string(off));
  }
}

Mat2 elimination_block(Complex a, Complex b, Complex mu) {
  check_unit_modulus(mu, "elimination_block");
  const double u = std::hypot(std::abs(a), std::abs(b));
  if (!(u > kZeroTol)) {
    throw DegeneratePivotError("elimination_block: pivot pair is numerically zero");
  }
  const Complex mu_bar = std::conj(mu);
  return {std::conj(a) / u, std::conj(b) / u, -mu_bar * b / u, mu_bar * a / u};
}

Mat2 phase_block(Complex mu) {
  check_unit_modulus(mu, "phase_block");
  return {1.0, 0.0, 0.0, std::conj(mu)};
}

std::vector<ScheduleEntry> sweep_schedule(std::size_t d) {
  if (d < 2) throw DomainError("sweep_schedule: dimension must be at least 2");
  std::vector<ScheduleEntry> s;
  s.reserve(d * (d - 1) / 2);
  for (std::size_t k = 1; k < d; ++k)
    for (std::size_t t = d - 1; t >= k; --t) s.push_back({k, t});
  return s;
}

Decomposition decompose(const UnitaryMatrix& u, const PermutationOrder& p) {
  if (p.size() != u.dim()) {
    throw DimensionError("permutation of length " + std::to_string(p.size()) + " for a " +
                         std::to_string(u.dim()) + "x" + std::to_string(u.dim()) + " matrix");
  }
  if (u.dim() == 1 && std::abs(u(0, 0) - 1.0) > kZeroTol) {
    throw DomainError("a 1x1 unitary other than [1] is not a product of two-level factors");
  }
  Matrix w = u.matrix();
  auto factors = sweep(w, p.values(), nullptr);
  return finish(u, {p.values().begin(), p.values().end()}, PhaseMode::Auto, std::move(factors));
}

Decomposition decompose(const UnitaryMatrix& u, const PermutationOrder& p,
                        const PhasePrescription& mus) {
  if (p.size() != u.dim()) {
    throw DimensionError("permutation of length " + std::to_string(p.size()) + " for a " +
                         std::to_string(u.dim()) + "x" + std::to_string(u.dim()) + " matrix");
  }
  validate_prescription(mus, u.dim(), determinant(u.matrix()));
  Matrix w = u.matrix();
  auto factors = sweep(w, p.values(), &mus);
  return finish(u, {p.values().begin(), p.values().end()}, PhaseMode::Prescribed,
                std::move(factors));
}

Matrix reconstruct(std::span<const TwoLevelFactor> factors, std::size_t d) {
  Matrix m = Matrix::identity(d);
  // F_1 (F_2 (... (F_N I))): each factor touches two rows.
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    check_index(it->rows[0], d, "reconstruct");
    check_index(it->rows[1], d, "reconstruct");
    if (it->rows[0] == it->rows[1]) throw DimensionError("reconstruct: factor rows coincide");
    left_apply(m, it->rows[0] - 1, it->rows[1] - 1, it->block);
  }
  return m;
}

Matrix reconstruct(const Decomposition& dec) { return reconstruct(dec.factors, dec.dim); }

VerificationReport verify(const Matrix& u, const Decomposition& dec, std::optional<double> tol) {
  VerificationReport r;
  const std::size_t d = u.rows();
  r.factor_count = dec.factors.size();
  r.nonidentity_count = count_nonidentity(dec.factors);
  const std::size_t m = dec.order.size();
  r.count_bound = m * (m == 0 ? 0 : m - 1) / 2;
  r.residual_tol = tol.value_or(reconstruction_tol(d));

  r.dims_ok = u.is_square() && dec.dim == d && m <= d;
  for (std::size_t j : dec.order) r.dims_ok = r.dims_ok && j >= 1 && j <= d;
  for (const auto& f : dec.factors) {
    for (std::size_t row : f.rows) r.dims_ok = r.dims_ok && row >= 1 && row <= d;
    r.dims_ok = r.dims_ok && f.rows[0] != f.rows[1];
  }
  if (!r.dims_ok) {
    r.residual = std::numeric_limits<double>::infinity();
    return r;
  }

  r.structure_ok = true;
  Complex det_product = 1.0;
  for (const auto& f : dec.factors) {
    FactorCheck c;
    c.unitarity_error = unitarity_error(f.block.to_matrix());
    c.det_error = std::abs(f.det - f.block.det());
    c.structure_ok = f.type >= 1 && f.type < m && f.rows[0] == dec.order[f.type - 1] &&
                     f.rows[1] == dec.order[f.type];
    r.max_unitarity_error = std::max(r.max_unitarity_error, c.unitarity_error);
    r.max_det_error = std::max(r.max_det_error, c.det_error);
    r.structure_ok = r.structure_ok && c.structure_ok;
    det_product *= f.block.det();
    r.factors.push_back(c);
  }

  r.residual = frobenius_distance(u, reconstruct(dec.factors, d));
  r.det_product_error = std::abs(det_product - determinant(u));
  r.residual_ok = r.residual <= r.residual_tol;
  r.blocks_ok = r.max_unitarity_error <= kBlockTol;
  r.dets_ok = r.max_det_error <= kBlockTol;
  r.det_product_ok = r.det_product_error <= kDetProductTol;
  r.count_ok = r.nonidentity_count <= r.count_bound &&
               (dec.mode == PhaseMode::Auto || r.factor_count == r.count_bound);
  return r;
}

std::vector<std::size_t> active_indices(const Matrix& u, double tol) {
  if (!u.is_square()) throw DimensionError("active_indices needs a square matrix");
  const std::size_t d = u.rows();
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Complex e = i == j ? Complex{1.0} : Complex{0.0};
      if (std::abs(u(i, j) - e) > tol || std::abs(u(j, i) - e) > tol) {
        active.push_back(i + 1);
        break;
      }
    }
  }
  return active;
}

Decomposition decompose_restricted(const UnitaryMatrix& u,
                                   std::span<const std::size_t> sub_order) {
  const std::size_t d = u.dim();
  std::vector<bool> in_sub(d + 1, false);
  for (std::size_t j : sub_order) {
    if (j < 1 || j > d) {
      throw DomainError("restricted order entry " + std::to_string(j) + " outside 1.." +
                        std::to_string(d));
    }
    if (in_sub[j]) throw DomainError("restricted order repeats index " + std::to_string(j));
    in_sub[j] = true;
  }
  for (std::size_t i : active_indices(u.matrix(), kZeroTol)) {
    if (!in_sub[i]) {
      throw CoverageError("index " + std::to_string(i) +
                          " is acted on by U but missing from the restricted order");
    }
  }
  Matrix w = u.matrix();
  auto factors = sweep(w, sub_order, nullptr);
  return finish(u, {sub_order.begin(), sub_order.end()}, PhaseMode::Auto, std::move(factors));
}

PlanResult apply_elimination_plan(const UnitaryMatrix& u, const EliminationPlan& plan) {
  const std::size_t d = u.dim();
  PlanResult out;
  out.residual_matrix = u.matrix();
  Matrix& w = out.residual_matrix;

  for (std::size_t i = 0; i < plan.size(); ++i) {
    const auto& step = plan[i];
    const std::string where = "plan step " + std::to_string(i + 1);
    for (std::size_t idx : {step.rows[0], step.rows[1], step.column}) {
      if (idx < 1 || idx > d) throw PlanError(where + ": index " + std::to_string(idx) + " out of range");
    }
    if (step.rows[0] == step.rows[1]) throw PlanError(where + ": row pair repeats an index");
    std::size_t pivot = step.rows[0];
    std::size_t target = step.rows[1];
    if (step.zero_row) {
      if (*step.zero_row == step.rows[0]) {
        std::swap(pivot, target);
      } else if (*step.zero_row != step.rows[1]) {
        throw PlanError(where + ": row " + std::to_string(*step.zero_row) +
                        " is not in the pivot pair");
      }
    }

    const std::size_t col = step.column - 1;
    const std::size_t r0 = pivot - 1;
    const std::size_t r1 = target - 1;
    const Complex a = w(r0, col);
    const Complex b = w(r1, col);
    if (std::hypot(std::abs(a), std::abs(b)) <= kZeroTol) continue;
    const bool last = i + 1 == plan.size();
    const Complex mu = last ? submatrix_phase(w, r0, r1) : Complex{1.0};
    const Mat2 block = elimination_block(a, b, mu);
    if (distance(block, Mat2::identity()) <= kZeroTol) continue;
    left_apply(w, r0, r1, block);
    out.factors.push_back(make_factor(0, pivot, target, block));
  }
  return out;
}

}  // namespace twolevel
