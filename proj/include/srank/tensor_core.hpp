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

#pragma once

/**
 * @file tensor_core.hpp
 * @brief Dense complex matrices, order-3 tensors, and explicit product-term
 *   decompositions. Everything downstream (gate catalog, Schmidt analysis,
 *   CP-ALS) is built on these types.
 */

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace srank {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/** Largest entry magnitude, max_{ij} |a_ij|. */
double max_abs(const ComplexMatrix& a);

/** Frobenius norm. */
double frobenius(const ComplexMatrix& a);

/** Conjugate transpose. */
ComplexMatrix dagger(const ComplexMatrix& a);

/** Kronecker product, row-major block convention: (a ⊗ b)[(i,k),(j,l)] = a[i,j]·b[k,l]. */
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/** ‖aa† − I‖_max; requires a square. */
double unitarity_deviation(const ComplexMatrix& a);

/** True iff a is square and ‖aa† − I‖_max ≤ tol. */
bool is_unitary(const ComplexMatrix& a, double tol = 1e-12);

/** True iff same shape and ‖a − b‖_max ≤ tol. */
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol = 1e-12);

/** Singular value decomposition a = u · diag(s) · v†, s sorted descending. */
struct Svd {
  ComplexMatrix u;
  Eigen::VectorXd s;
  ComplexMatrix v;
};

/** Thin SVD. Throws std::runtime_error if the backend reports non-convergence. */
Svd svd(const ComplexMatrix& a);

/** Count of singular values exceeding rel_tol · max(s); 0 for an all-zero spectrum. */
int numerical_rank(const Eigen::VectorXd& singular_values, double rel_tol = 1e-9);

/** Rank of a via its singular spectrum with relative threshold rel_tol. */
int numerical_rank(const ComplexMatrix& a, double rel_tol = 1e-9);

/**
 * Dense order-3 complex tensor with fixed row-major layout:
 * entry (i, j, k) lives at ((i·d2) + j)·d3 + k.
 */
class Tensor3 {
 public:
  Tensor3(int d1, int d2, int d3);

  const std::array<int, 3>& dims() const { return dims_; }
  Complex& at(int i, int j, int k);
  const Complex& at(int i, int j, int k) const;

  double frobenius() const;
  double max_abs() const;

 private:
  std::array<int, 3> dims_;
  std::vector<Complex> data_;
};

/** Entrywise max |t1 − t2|; shapes must match. */
double max_abs_diff(const Tensor3& t1, const Tensor3& t2);

/**
 * Flattening (unfolding) of t along one mode:
 *   mode 1: rows i, columns j·d3 + k
 *   mode 2: rows j, columns i·d3 + k
 *   mode 3: rows k, columns i·d2 + j
 * The rank of any flattening lower-bounds the tensor's CP rank.
 */
ComplexMatrix mode_flatten(const Tensor3& t, int mode);

/**
 * One product term of a decomposition: weight · factors[0] ⊗ factors[1] ⊗ ….
 * A factor is either a small matrix (2×2 for qubit systems) or a column/row
 * vector of coefficients in an operator basis.
 */
struct Term {
  Complex weight{1.0, 0.0};
  std::vector<ComplexMatrix> factors;
};

/** Ordered list of product terms; the length is the rank the list certifies. */
struct Decomposition {
  std::vector<Term> terms;
};

/** Σ_j weight_j · factors_j[0] ⊗ … ⊗ factors_j[n-1]; all terms must agree in shape. */
ComplexMatrix reconstruct_matrix(const Decomposition& d);

/**
 * Coefficient-space reconstruction into a tensor of the given dims. Each term
 * must have exactly three factors; a factor contributes a length-d coefficient
 * vector, either directly (d×1 or 1×d) or as the row-major vectorization of a
 * square matrix with d entries (a 2×2 factor yields the length-4 vector of its
 * matrix-unit coefficients).
 */
Tensor3 reconstruct_cp(const Decomposition& d, const std::array<int, 3>& dims);

}  // namespace srank
