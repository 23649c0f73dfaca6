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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace twolevel {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix of the given shape.
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Fixed 2x2 complex matrix, the active block of a two-level unitary.
struct Mat2 {
  Complex m00{1.0}, m01{0.0}, m10{0.0}, m11{1.0};

  static Mat2 identity() { return {}; }
  Complex det() const { return m00 * m11 - m01 * m10; }
  Mat2 adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }
  /// Conjugation by the swap [[0,1],[1,0]]: reverses row and column order.
  Mat2 swapped() const { return {m11, m10, m01, m00}; }
  Matrix to_matrix() const { return Matrix{{m00, m01}, {m10, m11}}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& a, const Mat2& b);

/// Frobenius norm of the difference of two 2x2 blocks.
double distance(const Mat2& a, const Mat2& b);

/// ||A||_F, accumulated with scaling so intermediate squares cannot overflow.
double frobenius_norm(const Matrix& a);

/// ||A - B||_F. Throws DimensionError on shape mismatch.
double frobenius_distance(const Matrix& a, const Matrix& b);

/// ||M^H M - I||_F. Throws DimensionError for non-square input.
double unitarity_error(const Matrix& m);

/// True iff ||M^H M - I||_F <= tol.
bool is_unitary(const Matrix& m, double tol);

/// Default unitarity tolerance for a d x d matrix: 1e-10 * d.
constexpr double default_unitarity_tol(std::size_t d) { return 1e-10 * static_cast<double>(d); }

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);

/// Matrix-vector product.
std::vector<Complex> apply(const Matrix& a, std::span<const Complex> x);

/// Determinant by LU factorization with partial pivoting.
Complex determinant(const Matrix& a);

/// Block-diagonal A (+) B.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Square matrix that has passed a unitarity check. Immutable.
class UnitaryMatrix {
 public:
  /// Validates ||M^H M - I||_F <= tol (default 1e-10 * d). Throws DimensionError for
  /// non-square or empty input and NotUnitaryError when the check fails.
  explicit UnitaryMatrix(Matrix m, std::optional<double> tol = std::nullopt);

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  Matrix m_;
};

/// Gaussian source used by random_unitary: mt19937_64 words mapped to 53-bit uniforms on
/// (0, 1] and paired through the Box-Muller transform. The mapping is spelled out here
/// rather than delegated to std::normal_distribution, whose output is library specific.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed);
  double next();

 private:
  double uniform();

  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Seeded random unitary: QR of a complex Gaussian matrix (Gram-Schmidt applied twice)
/// with the R diagonal taken positive real. Throws DomainError for d == 0.
UnitaryMatrix random_unitary(std::size_t d, std::uint64_t seed);

/// Seeded random real orthogonal matrix, built the same way from a real Gaussian matrix.
UnitaryMatrix random_orthogonal(std::size_t d, std::uint64_t seed);

}  // namespace twolevel
