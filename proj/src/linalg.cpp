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

#include "twolevel/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "twolevel/errors.hpp"

namespace twolevel {

namespace {

std::string shape(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

// Running scaled sum of squares: ssq * scale^2 == sum of squared magnitudes so far.
struct ScaledSquares {
  double scale = 0.0;
  double ssq = 1.0;

  void add(double x) {
    x = std::abs(x);
    if (x == 0.0) return;
    if (scale < x) {
      ssq = 1.0 + ssq * (scale / x) * (scale / x);
      scale = x;
    } else {
      ssq += (x / scale) * (x / scale);
    }
  }
  void add(Complex z) {
    add(z.real());
    add(z.imag());
  }
  double norm() const { return scale * std::sqrt(ssq); }
};

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0}) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix of shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " given " + std::to_string(entries_.size()) + " entries");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t d) {
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

double distance(const Mat2& a, const Mat2& b) {
  ScaledSquares acc;
  acc.add(a.m00 - b.m00);
  acc.add(a.m01 - b.m01);
  acc.add(a.m10 - b.m10);
  acc.add(a.m11 - b.m11);
  return acc.norm();
}

double frobenius_norm(const Matrix& a) {
  ScaledSquares acc;
  for (const Complex& z : a.entries()) acc.add(z);
  return acc.norm();
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("frobenius_distance: " + shape(a) + " vs " + shape(b));
  }
  ScaledSquares acc;
  auto x = a.entries();
  auto y = b.entries();
  for (std::size_t k = 0; k < x.size(); ++k) acc.add(x[k] - y[k]);
  return acc.norm();
}

double unitarity_error(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("unitarity check needs a square matrix, got " + shape(m));
  const std::size_t d = m.rows();
  ScaledSquares acc;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Complex g = 0.0;
      for (std::size_t k = 0; k < d; ++k) g += std::conj(m(k, i)) * m(k, j);
      if (i == j) g -= 1.0;
      acc.add(g);
    }
  }
  return acc.norm();
}

bool is_unitary(const Matrix& m, double tol) { return unitarity_error(m) <= tol; }

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul: " + shape(a) + " * " + shape(b));
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

Matrix adjoint(const Matrix& a) {
  Matrix h(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) h(j, i) = std::conj(a(i, j));
  return h;
}

std::vector<Complex> apply(const Matrix& a, std::span<const Complex> x) {
  if (a.cols() != x.size()) {
    throw DimensionError("apply: " + shape(a) + " on vector of length " + std::to_string(x.size()));
  }
  std::vector<Complex> y(a.rows(), Complex{0.0});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

Complex determinant(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of non-square " + shape(a));
  const std::size_t d = a.rows();
  Matrix lu = a;
  Complex det = 1.0;
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < d; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(pivot, k))) pivot = i;
    if (lu(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t j = 0; j < d; ++j) std::swap(lu(k, j), lu(pivot, j));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < d; ++i) {
      const Complex l = lu(i, k) / lu(k, k);
      for (std::size_t j = k + 1; j < d; ++j) lu(i, j) -= l * lu(k, j);
    }
  }
  return det;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix s(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
  return s;
}

UnitaryMatrix::UnitaryMatrix(Matrix m, std::optional<double> tol) : m_(std::move(m)) {
  if (!m_.is_square() || m_.rows() == 0) {
    throw DimensionError("unitary matrix must be square and non-empty, got " + shape(m_));
  }
  const double limit = tol.value_or(default_unitarity_tol(m_.rows()));
  const double err = unitarity_error(m_);
  if (!(err <= limit)) {
    throw NotUnitaryError("unitarity check failed: ||U^H U - I||_F = " + std::to_string(err) +
                          " exceeds tolerance " + std::to_string(limit));
  }
}

GaussianSource::GaussianSource(std::uint64_t seed) : engine_(seed) {}

double GaussianSource::uniform() {
  // Top 53 bits, shifted into (0, 1] so log() below stays finite.
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianSource::next() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double theta = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(theta);
  return r * std::cos(theta);
}

namespace {

// Orthonormalizes the columns of z in place (classical Gram-Schmidt, two passes). Each
// column is divided by its remaining norm, which is the positive real R diagonal entry.
void orthonormalize_columns(Matrix& z) {
  const std::size_t d = z.rows();
  for (std::size_t j = 0; j < d; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex r = 0.0;
        for (std::size_t i = 0; i < d; ++i) r += std::conj(z(i, k)) * z(i, j);
        for (std::size_t i = 0; i < d; ++i) z(i, j) -= r * z(i, k);
      }
    }
    ScaledSquares acc;
    for (std::size_t i = 0; i < d; ++i) acc.add(z(i, j));
    const double norm = acc.norm();
    if (norm == 0.0) throw DomainError("random_unitary: rank-deficient Gaussian sample");
    for (std::size_t i = 0; i < d; ++i) z(i, j) /= norm;
  }
}

}  // namespace

UnitaryMatrix random_unitary(std::size_t d, std::uint64_t seed) {
  if (d == 0) throw DomainError("random_unitary: dimension must be at least 1");
  GaussianSource gauss(seed);
  Matrix z(d, d);
  const double s = std::sqrt(0.5);
  for (Complex& e : z.entries()) {
    const double re = gauss.next();
    const double im = gauss.next();
    e = Complex{s * re, s * im};
  }
  orthonormalize_columns(z);
  return UnitaryMatrix(std::move(z), 1e-10 * static_cast<double>(d));
}

UnitaryMatrix random_orthogonal(std::size_t d, std::uint64_t seed) {
  if (d == 0) throw DomainError("random_orthogonal: dimension must be at least 1");
  GaussianSource gauss(seed);
  Matrix z(d, d);
  for (Complex& e : z.entries()) e = gauss.next();
  orthonormalize_columns(z);
  return UnitaryMatrix(std::move(z), 1e-10 * static_cast<double>(d));
}

}  // namespace twolevel
