// Copyright 2026 The srank Authors
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

#include "srank/tensor_core.hpp"

#include <doctest.h>

#include "srank/gate_catalog.hpp"

namespace srank {
namespace {

TEST_SUITE("tensor_core") {

TEST_CASE("scalar helpers on small fixed matrices") {
  ComplexMatrix a(1, 2);
  a << Complex(3, 0), Complex(0, -4);
  CHECK(max_abs(a) == doctest::Approx(4.0));
  CHECK(frobenius(a) == doctest::Approx(5.0));

  ComplexMatrix b(2, 2);
  b << Complex(0, 1), Complex(0, 0), Complex(1, 0), Complex(0, 2);
  const ComplexMatrix bd = dagger(b);
  CHECK(bd(0, 0) == Complex(0, -1));
  CHECK(bd(0, 1) == Complex(1, 0));
  CHECK(bd(1, 0) == Complex(0, 0));
  CHECK(bd(1, 1) == Complex(0, -2));
}

TEST_CASE("kron follows the row-major block convention") {
  ComplexMatrix a(2, 2), b(2, 2);
  a << Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 1);
  b << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, -1);
  const ComplexMatrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
          CHECK(k(2 * i + p, 2 * j + q) == a(i, j) * b(p, q));
        }
      }
    }
  }
}

TEST_CASE("unitarity checks separate unitary from scaled matrices") {
  CHECK(unitarity_deviation(elementary("H")) <= 1e-12);
  CHECK(is_unitary(elementary("CNOT")));
  const ComplexMatrix twice = 2.0 * ComplexMatrix::Identity(2, 2);
  CHECK(unitarity_deviation(twice) == doctest::Approx(3.0));
  CHECK_FALSE(is_unitary(twice));
}

TEST_CASE("approx_equal compares shape and entries") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix i3 = ComplexMatrix::Identity(3, 3);
  CHECK(approx_equal(i2, i2));
  CHECK_FALSE(approx_equal(i2, i3));
  ComplexMatrix nudged = i2;
  nudged(0, 1) = Complex(5e-13, 0);
  CHECK(approx_equal(i2, nudged));
  CHECK_FALSE(approx_equal(i2, nudged, 1e-13));
}

TEST_CASE("svd returns a descending spectrum that reconstructs") {
  ComplexMatrix a(2, 2);
  a << Complex(3, 0), Complex(0, 0), Complex(0, 0), Complex(0, 2);
  const Svd f = svd(a);
  REQUIRE(f.s.size() == 2);
  CHECK(f.s(0) == doctest::Approx(3.0));
  CHECK(f.s(1) == doctest::Approx(2.0));
  const ComplexMatrix rebuilt = f.u * f.s.asDiagonal() * dagger(f.v);
  CHECK(max_abs(ComplexMatrix(rebuilt - a)) <= 1e-12);
}

TEST_CASE("numerical_rank applies a relative threshold") {
  Eigen::VectorXd s(3);
  s << 1.0, 1e-10, 0.0;
  CHECK(numerical_rank(s) == 1);
  CHECK(numerical_rank(s, 1e-11) == 2);
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(2);
  CHECK(numerical_rank(zero) == 0);
  CHECK(numerical_rank(ComplexMatrix(ComplexMatrix::Identity(3, 3))) == 3);
}

TEST_CASE("Tensor3 stores entries addressable by index triple") {
  Tensor3 t(2, 3, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 4; ++k) t.at(i, j, k) = Complex(100 * i + 10 * j + k, -k);
    }
  }
  CHECK(t.dims() == std::array<int, 3>{2, 3, 4});
  CHECK(t.at(1, 2, 3) == Complex(123, -3));
  CHECK(t.max_abs() == doctest::Approx(std::abs(Complex(123, -3))));
}

TEST_CASE("mode_flatten matches the documented index maps") {
  Tensor3 t(2, 3, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 4; ++k) t.at(i, j, k) = Complex(100 * i + 10 * j + k, 0);
    }
  }
  const ComplexMatrix m1 = mode_flatten(t, 1);
  const ComplexMatrix m2 = mode_flatten(t, 2);
  const ComplexMatrix m3 = mode_flatten(t, 3);
  REQUIRE(m1.rows() == 2);
  REQUIRE(m1.cols() == 12);
  REQUIRE(m2.rows() == 3);
  REQUIRE(m2.cols() == 8);
  REQUIRE(m3.rows() == 4);
  REQUIRE(m3.cols() == 6);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 4; ++k) {
        CHECK(m1(i, j * 4 + k) == t.at(i, j, k));
        CHECK(m2(j, i * 4 + k) == t.at(i, j, k));
        CHECK(m3(k, i * 3 + j) == t.at(i, j, k));
      }
    }
  }
}

TEST_CASE("max_abs_diff reports the largest entry gap") {
  Tensor3 a(2, 2, 2), b(2, 2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        a.at(i, j, k) = Complex(i + j + k, 0);
        b.at(i, j, k) = Complex(i + j + k, 0);
      }
    }
  }
  b.at(1, 0, 1) += Complex(0, 0.25);
  CHECK(max_abs_diff(a, b) == doctest::Approx(0.25));
}

TEST_CASE("reconstruct_matrix sums weighted Kronecker terms") {
  // Controlled-NOT on the third qubit of three: S0 x I4 + S3 x CNOT.
  Decomposition d;
  d.terms.push_back(Term{Complex(1, 0), {matrix_unit(0), ComplexMatrix::Identity(4, 4)}});
  d.terms.push_back(Term{Complex(1, 0), {matrix_unit(3), elementary("CNOT")}});
  CHECK(max_abs(ComplexMatrix(reconstruct_matrix(d) - gate("TOFFOLI").matrix)) <= 1e-12);
}

TEST_CASE("reconstruct_cp treats a 2x2 factor as its row-major coefficient vector") {
  Decomposition matrix_form;
  matrix_form.terms.push_back(
      Term{Complex(2, 1), {elementary("X"), matrix_unit(3), elementary("H")}});

  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix va(4, 1), vb(4, 1), vc(4, 1);
  va << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  vb << Complex(0, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0);
  vc << Complex(s, 0), Complex(s, 0), Complex(s, 0), Complex(-s, 0);
  Decomposition vector_form;
  vector_form.terms.push_back(Term{Complex(2, 1), {va, vb, vc}});

  const Tensor3 tm = reconstruct_cp(matrix_form, {4, 4, 4});
  const Tensor3 tv = reconstruct_cp(vector_form, {4, 4, 4});
  CHECK(max_abs_diff(tm, tv) <= 1e-15);
  CHECK(tm.at(1, 3, 0) == Complex(2, 1) * Complex(s, 0));
  CHECK(tm.at(0, 0, 0) == Complex(0, 0));
}

}  // TEST_SUITE

}  // namespace
}  // namespace srank
