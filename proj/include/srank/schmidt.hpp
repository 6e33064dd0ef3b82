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
 * @file schmidt.hpp
 * @brief Operator Schmidt analysis: realignment across a bipartite cut, the
 *   SVD-induced operator decomposition, tripartite coefficient tensors, and
 *   flattening rank lower bounds.
 */

#include <array>
#include <string>
#include <vector>

#include "srank/tensor_core.hpp"

namespace srank {

/** Bipartition of system indices; left ∪ right = {0..n-1}, both nonempty. */
struct Cut {
  std::vector<int> left;
  std::vector<int> right;
};

/** Parse "A|BC"-style cut strings; letters A.. name systems 0.. of n_systems. */
Cut parse_cut(const std::string& text, int n_systems);

void validate_cut(const Cut& cut, int n_systems);

/**
 * Realignment of a multipartite operator across a cut: the matrix R with
 * R[(i_S, j_S), (i_T, j_T)] = U[(i_S, i_T), (j_S, j_T)] for S = cut.left and
 * T = cut.right (indices mixed-radix in cut order, row/column pair per system,
 * radix d_s per half). rank(R) is the bipartite Schmidt rank across the cut.
 */
ComplexMatrix realign(const ComplexMatrix& u, const std::vector<int>& dims, const Cut& cut);

/**
 * Operator Schmidt decomposition across a cut: u = Σ_m weights[m] ·
 * left_ops[m] ⊗ right_ops[m] with the factor legs re-interleaved per the cut.
 * Both factor families are trace-orthonormal; weights are positive descending.
 */
struct BipartiteSchmidt {
  int rank = 0;
  std::vector<double> weights;
  std::vector<ComplexMatrix> left_ops;
  std::vector<ComplexMatrix> right_ops;
};

BipartiteSchmidt bipartite_schmidt(const ComplexMatrix& u, const std::vector<int>& dims,
                                   const Cut& cut, double rel_tol = 1e-9);

/** Rebuild the full operator from a BipartiteSchmidt, re-interleaving per the cut. */
ComplexMatrix reconstruct_bipartite(const BipartiteSchmidt& bs, const std::vector<int>& dims,
                                    const Cut& cut);

/**
 * Coefficient tensor of a three-qubit operator in the matrix-unit basis:
 * T[a, b, c] = U[(i_a, i_b, i_c), (j_a, j_b, j_c)] with a = 2·i_a + j_a etc.
 * An exact entry permutation, so CP rank of T = Schmidt rank of U.
 */
Tensor3 operator_tensor3(const ComplexMatrix& u);

/** Ranks of the three flattenings of t at the given relative threshold. */
std::array<int, 3> mode_ranks(const Tensor3& t, double rel_tol = 1e-9);

/** max(mode_ranks): a proved lower bound on the CP rank of t. */
int flattening_lower_bound(const Tensor3& t, double rel_tol = 1e-9);

/** Absolute Frobenius residual ‖t − reconstruct_cp(d)‖_F; ≤ 1e-12 certifies rank ≤ #terms. */
double verify_decomposition(const Tensor3& t, const Decomposition& d);

/** Matrix-level variant for decompositions of any arity: ‖u − reconstruct_matrix(d)‖_F. */
double verify_decomposition(const ComplexMatrix& u, const Decomposition& d);

}  // namespace srank
