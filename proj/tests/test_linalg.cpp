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

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "twolevel/errors.hpp"
#include "twolevel/linalg.hpp"

using namespace twolevel;
using namespace std::complex_literals;

TEST_CASE("frobenius_distance") {
  CHECK(frobenius_distance(Matrix::identity(2), Matrix::identity(2)) == 0.0);
  CHECK(frobenius_distance(Matrix::identity(2), Matrix(2, 2)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const Matrix a = oracle::random_gaussian(4, 4, 11);
  Matrix b = a;
  b(2, 1) += 1e-3;
  CHECK(frobenius_distance(a, b) == doctest::Approx(1e-3).epsilon(1e-9));

  CHECK_THROWS_AS(frobenius_distance(Matrix(2, 2), Matrix(2, 3)), DimensionError);
}

TEST_CASE("frobenius_norm does not overflow") {
  Matrix big(2, 2);
  big(0, 0) = 1e200;
  big(1, 1) = 1e200;
  CHECK(frobenius_norm(big) == doctest::Approx(std::sqrt(2.0) * 1e200));
}

TEST_CASE("is_unitary") {
  CHECK(is_unitary(Matrix::identity(4), 1e-12));
  CHECK_FALSE(is_unitary(Matrix{{1.0, 0.0}, {0.0, 2.0}}, 1e-12));

  // Independent Gram-Schmidt on a Gaussian sample.
  Matrix q = oracle::random_gaussian(8, 8, 5);
  for (std::size_t j = 0; j < 8; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex r = 0.0;
      for (std::size_t i = 0; i < 8; ++i) r += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < 8; ++i) q(i, j) -= r * q(i, k);
    }
    double n = 0.0;
    for (std::size_t i = 0; i < 8; ++i) n += std::norm(q(i, j));
    for (std::size_t i = 0; i < 8; ++i) q(i, j) /= std::sqrt(n);
  }
  CHECK(is_unitary(q, 1e-10));

  CHECK_THROWS_AS(is_unitary(Matrix(2, 3), 1e-12), DimensionError);
}

TEST_CASE("matmul") {
  const auto u = random_unitary(3, 2).matrix();
  CHECK(matmul(Matrix::identity(3), u) == u);
  CHECK(frobenius_distance(matmul(u, adjoint(u)), Matrix::identity(3)) <= 1e-12);

  const Complex a = 1.0 + 2i, b = -3.0, c = 0.5i, d = 4.0 - 1i;
  const Matrix swap{{0.0, 1.0}, {1.0, 0.0}};
  CHECK(matmul(swap, Matrix{{a, b}, {c, d}}) == Matrix{{c, d}, {a, b}});

  CHECK_THROWS_AS(matmul(Matrix(2, 3), Matrix(2, 3)), DimensionError);
}

TEST_CASE("adjoint") {
  CHECK(adjoint(Matrix::identity(5)) == Matrix::identity(5));
  CHECK(adjoint(Matrix{{0.0, 1i}, {0.0, 0.0}}) == Matrix{{0.0, 0.0}, {-1i, 0.0}});
  const Matrix a = oracle::random_gaussian(3, 5, 9);
  CHECK(adjoint(adjoint(a)) == a);
  CHECK(adjoint(a) == oracle::naive_adjoint(a));
}

TEST_CASE("determinant") {
  CHECK(determinant(Matrix::identity(6)) == Complex{1.0});
  CHECK(determinant(Matrix{{1i, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}) == 1i);
  CHECK(determinant(Matrix(3, 3)) == Complex{0.0});

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Matrix a = oracle::random_gaussian(5, 5, 100 + seed);
    const Complex expected = oracle::leibniz_determinant(a);
    CHECK(std::abs(determinant(a) - expected) <= 1e-10 * std::abs(expected));
  }

  for (std::size_t d : {1, 4, 16, 32}) {
    CHECK(std::abs(std::abs(determinant(random_unitary(d, 8).matrix())) - 1.0) <= 1e-10);
  }

  CHECK_THROWS_AS(determinant(Matrix(2, 3)), DimensionError);
}

TEST_CASE("random_unitary") {
  const auto one = random_unitary(1, 4);
  CHECK(std::abs(std::abs(one(0, 0)) - 1.0) <= 1e-15);

  CHECK(random_unitary(6, 42).matrix() == random_unitary(6, 42).matrix());
  CHECK_FALSE(random_unitary(6, 42).matrix() == random_unitary(6, 43).matrix());

  CHECK(is_unitary(random_unitary(16, 7).matrix(), 1e-10));
  CHECK(is_unitary(random_unitary(64, 1).matrix(), 1e-10 * 64));

  CHECK_THROWS_AS(random_unitary(0, 1), DomainError);
}

TEST_CASE("random_orthogonal is real") {
  const auto q = random_orthogonal(7, 3);
  for (const Complex& z : q.matrix().entries()) CHECK(z.imag() == 0.0);
  CHECK(is_unitary(q.matrix(), 1e-12));
}

TEST_CASE("UnitaryMatrix validates its input") {
  CHECK_THROWS_AS(UnitaryMatrix(Matrix{{1.0, 0.0}, {0.0, 2.0}}), NotUnitaryError);
  CHECK_THROWS_AS(UnitaryMatrix(Matrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(UnitaryMatrix{Matrix{}}, DimensionError);
  Matrix zero_row = Matrix::identity(3);
  zero_row(1, 1) = 0.0;
  CHECK_THROWS_AS(UnitaryMatrix{zero_row}, NotUnitaryError);
  CHECK_NOTHROW(UnitaryMatrix{Matrix::identity(3)});
}

TEST_CASE("product identities on random unitaries") {
  for (std::size_t d : {2, 5, 9, 16, 32}) {
    const auto a = random_unitary(d, 3 * d).matrix();
    const auto b = random_unitary(d, 3 * d + 1).matrix();
    const auto c = random_unitary(d, 3 * d + 2).matrix();
    const double dd = static_cast<double>(d);
    CHECK(frobenius_distance(matmul(matmul(a, b), c), matmul(a, matmul(b, c))) <= 1e-12 * dd);
    CHECK(std::abs(determinant(matmul(a, b)) - determinant(a) * determinant(b)) <= 1e-9);
    CHECK(frobenius_distance(adjoint(matmul(a, b)), matmul(adjoint(b), adjoint(a))) <= 1e-13 * dd);
    CHECK(oracle::max_abs_diff(matmul(a, b), oracle::naive_multiply(a, b)) <= 1e-14);
  }
}

TEST_CASE("direct_sum") {
  const Matrix s = direct_sum(Matrix::identity(2), Matrix{{0.0, 1.0}, {1.0, 0.0}});
  CHECK(s == Matrix{{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}});
}
