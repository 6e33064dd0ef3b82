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
 * @file gate_catalog.hpp
 * @brief Named gates and tensors under study, each bundled with its explicit
 *   product-term expansion (a rank-upper-bound certificate) and the rank the
 *   catalog commits to, when it commits to one.
 */

#include <string>
#include <vector>

#include "srank/tensor_core.hpp"

namespace srank {

/** A catalog gate: matrix, bundled certificate, and rank bookkeeping. */
struct GateEntry {
  std::string name;
  std::vector<int> system_dims;  // one entry per subsystem, e.g. {2, 2, 2}
  ComplexMatrix matrix;
  /** Explicit product-term expansion; empty terms when none is bundled. */
  Decomposition certificate;
  /** Committed Schmidt rank values, ascending; empty when uncommitted. */
  std::vector<int> claimed_rank;
  /** True when claimed_rank.back() is only an upper bound (bullock16). */
  bool claim_is_upper_bound = false;
  bool claimed_unitary = true;
  /** One line describing the construction. */
  std::string summary;
};

/** Names accepted as lowercase circuit mnemonics: I2, S0–S3, X, Y, Z, H, CNOT, CZ, SWAP, TOFFOLI, FREDKIN. */
const std::vector<std::string>& elementary_names();

/** Gates carrying a rank commitment beyond the elementary set. */
const std::vector<std::string>& claimed_gate_names();

/** Elementary names followed by claimed gate names. */
const std::vector<std::string>& all_gate_names();

bool is_gate(const std::string& name);

/** Matrix of an elementary gate; throws std::invalid_argument for unknown names. */
const ComplexMatrix& elementary(const std::string& name);

/** Matrix unit with the single unit entry at (i div 2, i mod 2), i in 0..3. */
const ComplexMatrix& matrix_unit(int i);

/** Full entry for any catalog name; throws std::invalid_argument for unknown names. */
const GateEntry& gate(const std::string& name);

/**
 * The 4×4×4 tensor of 2×2 matrix multiplication: Σ_{i,j,k} e_ij ⊗ e_jk ⊗ e_ki
 * with e_ab stored at coefficient index 2a + b. Its CP rank is seven.
 */
const Tensor3& matmul_tensor();

/**
 * Strassen's seven-product schedule as a CP certificate for matmul_tensor():
 * seven terms of three length-4 coefficient vectors with entries in {−1, 0, 1}.
 */
const Decomposition& strassen_certificate();

}  // namespace srank
