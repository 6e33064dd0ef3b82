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

#include "srank/gate_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

namespace srank {

namespace {

const Complex kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Length-4 coefficient column, the operator-basis view of one factor.
ComplexMatrix cvec4(double x0, double x1, double x2, double x3) {
  ComplexMatrix v(4, 1);
  v << Complex(x0), Complex(x1), Complex(x2), Complex(x3);
  return v;
}

const ComplexMatrix kI2 = ComplexMatrix::Identity(2, 2);
const ComplexMatrix kX = mat2(0, 1, 1, 0);
const ComplexMatrix kY = mat2(0, -kI, kI, 0);
const ComplexMatrix kZ = mat2(1, 0, 0, -1);
const ComplexMatrix kH = kInvSqrt2 * mat2(1, 1, 1, -1);
const ComplexMatrix kS[4] = {mat2(1, 0, 0, 0), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0),
                             mat2(0, 0, 0, 1)};

Term term(Complex weight, std::vector<ComplexMatrix> factors) {
  return Term{weight, std::move(factors)};
}

// Controlled gates in the control-first convention: |0><0| ⊗ I + |1><1| ⊗ target.
ComplexMatrix controlled(const ComplexMatrix& target) {
  int n = static_cast<int>(target.rows());
  ComplexMatrix out = ComplexMatrix::Zero(2 * n, 2 * n);
  out.topLeftCorner(n, n) = ComplexMatrix::Identity(n, n);
  out.bottomRightCorner(n, n) = target;
  return out;
}

const ComplexMatrix kCnot = controlled(kX);
const ComplexMatrix kCz = controlled(kZ);
const ComplexMatrix kSwapGate = (ComplexMatrix(4, 4) << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0,
                                 0, 1)
                                    .finished();
const ComplexMatrix kToffoli = controlled(kCnot);
const ComplexMatrix kFredkin = controlled(kSwapGate);

GateEntry elementary_entry(const std::string& name, std::vector<int> dims, ComplexMatrix m,
                           bool unitary, std::string summary) {
  GateEntry e;
  e.name = name;
  e.system_dims = std::move(dims);
  e.matrix = std::move(m);
  e.claimed_unitary = unitary;
  e.summary = std::move(summary);
  return e;
}

Decomposition toffoli_certificate() {
  // Folding the Hadamard conjugation of the |111> reflector gives the two-term
  // form I⊗I⊗I − S3⊗S3⊗(I−σ1).
  Decomposition d;
  d.terms.push_back(term(1.0, {kI2, kI2, kI2}));
  d.terms.push_back(term(-1.0, {kS[3], kS[3], kI2 - kX}));
  return d;
}

Decomposition fredkin_certificate() {
  Decomposition d;
  d.terms.push_back(term(1.0, {kS[0] + 0.5 * kS[3], kI2, kI2}));
  d.terms.push_back(term(0.5, {kS[3], kZ, kZ}));
  d.terms.push_back(term(1.0, {kS[3], kS[1], kS[2]}));
  d.terms.push_back(term(1.0, {kS[3], kS[2], kS[1]}));
  return d;
}

Decomposition swap_certificate() {
  Decomposition d;
  d.terms.push_back(term(0.5, {kI2, kI2}));
  d.terms.push_back(term(0.5, {kX, kX}));
  d.terms.push_back(term(0.5, {kY, kY}));
  d.terms.push_back(term(0.5, {kZ, kZ}));
  return d;
}

Decomposition controlled_certificate(const ComplexMatrix& target) {
  Decomposition d;
  d.terms.push_back(term(1.0, {kS[0], kI2}));
  d.terms.push_back(term(1.0, {kS[3], target}));
  return d;
}

Decomposition single_term_certificate(const ComplexMatrix& m) {
  Decomposition d;
  d.terms.push_back(term(1.0, {m}));
  return d;
}

GateEntry u3_pauli_entry() {
  GateEntry e;
  e.name = "U3_pauli";
  e.system_dims = {2, 2, 2};
  Decomposition d;
  d.terms.push_back(term(kInvSqrt3, {kI2, kI2, kI2}));
  d.terms.push_back(term(kI * kInvSqrt3, {kX, kX, kX}));
  d.terms.push_back(term(kI * kInvSqrt3, {kZ, kZ, kZ}));
  e.certificate = d;
  e.matrix = reconstruct_matrix(d);
  e.claimed_rank = {3};
  e.summary = "(1/sqrt3)(I⊗I⊗I + i X⊗X⊗X + i Z⊗Z⊗Z), rank three";
  return e;
}

GateEntry u3_circ_entry() {
  GateEntry e;
  e.name = "U3_circ";
  e.system_dims = {2, 2, 2};
  Decomposition d;
  d.terms.push_back(term(1.0, {kS[0], kI2, kI2}));
  d.terms.push_back(term(1.0, {kS[3], kX, kI2}));
  d.terms.push_back(term(-2.0, {kS[3], kS[1], kS[3]}));
  e.certificate = d;
  e.matrix = reconstruct_matrix(d);
  e.claimed_rank = {3};
  e.summary = "Hadamard-dressed Toffoli (cnot01 ⊗ H) · Toffoli · (I⊗I⊗H), rank three";
  return e;
}

GateEntry u4_entry() {
  GateEntry e;
  e.name = "U4";
  e.system_dims = {2, 2, 2};
  Decomposition d;
  d.terms.push_back(term(1.0, {kS[0], kS[0], kI2}));
  d.terms.push_back(term(1.0, {kS[0], kS[3], kX}));
  d.terms.push_back(term(1.0, {kS[3], kS[2], kI2}));
  d.terms.push_back(term(1.0, {kS[3], kS[1], kX}));
  e.certificate = d;
  e.matrix = kron(kCnot, kI2) * kron(kI2, kCnot);
  e.claimed_rank = {4};
  e.summary = "two-CNOT product cnot01 · cnot12, rank four";
  return e;
}

GateEntry u5_thm1_entry() {
  GateEntry e;
  e.name = "U5_thm1";
  e.system_dims = {2, 2, 2};
  Decomposition d;
  d.terms.push_back(term(0.5, {kS[0], kI2, kI2}));
  d.terms.push_back(term(0.5, {kS[0], kX, kX}));
  d.terms.push_back(term(1.0, {kS[3], kI2, kX}));
  d.terms.push_back(term(0.5, {kS[0], kY, kY}));
  d.terms.push_back(term(0.5, {kS[0], kZ, kZ}));
  e.certificate = d;
  e.matrix = reconstruct_matrix(d);
  e.claimed_rank = {5};
  e.summary = "block diag(SWAP, I⊗X): five-term witness of rank five";
  return e;
}

GateEntry u5_circ_entry() {
  GateEntry e;
  e.name = "U5_circ";
  e.system_dims = {2, 2, 2};
  Decomposition d;
  d.terms.push_back(term(1.0, {kS[0], kI2, kI2}));
  d.terms.push_back(term(0.5, {kS[3], kX, kI2}));
  d.terms.push_back(term(0.5, {kS[3], kX * kZ, kZ}));
  d.terms.push_back(term(1.0, {kS[3], kS[3], kS[2]}));
  d.terms.push_back(term(1.0, {kS[3], kS[0], kS[1]}));
  e.certificate = d;
  e.matrix = kron(kCnot, kI2) * kFredkin;
  e.claimed_rank = {5};
  e.summary = "cnot01 · Fredkin, rank five";
  return e;
}

GateEntry u6_thm1_entry() {
  GateEntry e;
  e.name = "U6_thm1";
  e.system_dims = {2, 2, 2};
  Decomposition d;
  d.terms.push_back(term(0.5, {kS[0], kI2, kI2}));
  d.terms.push_back(term(0.5, {kS[0], kX, kX}));
  d.terms.push_back(term(kInvSqrt2, {kS[3], kI2, kX}));
  d.terms.push_back(term(0.5, {kS[0], kY, kY}));
  d.terms.push_back(term(0.5, {kS[0], kZ, kZ}));
  d.terms.push_back(term(kInvSqrt2, {kS[3], kY, kZ}));
  e.certificate = d;
  e.matrix = reconstruct_matrix(d);
  e.claimed_rank = {6};
  e.summary = "block diag(SWAP, (I⊗X + Y⊗Z)/sqrt2): six-term witness of rank six";
  return e;
}

GateEntry u6_circ_entry() {
  GateEntry e;
  e.name = "U6_circ";
  e.system_dims = {2, 2, 2};
  Decomposition d;
  d.terms.push_back(term(kInvSqrt2, {kS[0], kI2, kI2}));
  d.terms.push_back(term(kInvSqrt2, {kS[1], kX, kI2}));
  d.terms.push_back(term(-2.0 * kInvSqrt2, {kS[1], kS[1], kS[3]}));
  d.terms.push_back(term(kInvSqrt2, {kS[2], kI2, kX}));
  d.terms.push_back(term(2.0 * kInvSqrt2, {kS[3], kS[1], kS[1]}));
  d.terms.push_back(term(-kInvSqrt2, {kS[3], kX, kX}));
  e.certificate = d;
  // cnot02 · (H ⊗ I ⊗ I) · U3_circ, with cnot02 = S0⊗I⊗I + S3⊗I⊗X.
  ComplexMatrix cnot02 = kron(kron(kS[0], kI2), kI2) + kron(kron(kS[3], kI2), kX);
  e.matrix = cnot02 * kron(kron(kH, kI2), kI2) * u3_circ_entry().matrix;
  e.claimed_rank = {6};
  e.summary = "cnot02 · (H⊗I⊗I) · U3_circ, rank six";
  return e;
}

GateEntry u7_entry() {
  GateEntry e;
  e.name = "U7";
  e.system_dims = {2, 2, 2};
  Decomposition d;
  d.terms.push_back(term(1.0, {kS[1], kS[2], kS[0]}));
  d.terms.push_back(term(1.0, {kS[2], kS[3], kS[0]}));
  d.terms.push_back(term(1.0, {kS[0], kS[0], kS[1]}));
  d.terms.push_back(term(1.0, {kS[3], kS[1], kS[1]}));
  d.terms.push_back(term(1.0, {kS[1], kS[1], kS[2]}));
  d.terms.push_back(term(1.0, {kS[2], kS[0], kS[2]}));
  d.terms.push_back(term(1.0, {kS[0], kS[3], kS[3]}));
  d.terms.push_back(term(1.0, {kS[3], kS[2], kS[3]}));
  e.certificate = d;
  e.matrix = reconstruct_matrix(d);
  // The bundled expansion has eight terms; the rank-seven commitment rests on
  // the permutation isomorphism with the Strassen tensor (claim C10).
  e.claimed_rank = {7};
  e.summary = "unitary permutation gate whose coefficient tensor is Strassen's, rank seven";
  return e;
}

GateEntry u8_entry() {
  GateEntry e;
  e.name = "U8";
  e.system_dims = {2, 2, 2};
  Decomposition d;
  d.terms.push_back(term(1.0, {kS[0], kS[0], kS[0]}));
  d.terms.push_back(term(1.0, {kS[1], kS[3], kS[0]}));
  d.terms.push_back(term(1.0, {kS[2], kS[0], kS[1]}));
  d.terms.push_back(term(1.0, {kS[3], kS[2], kS[1]}));
  d.terms.push_back(term(1.0, {kS[0], kS[1], kS[2]}));
  d.terms.push_back(term(1.0, {kS[1], kS[2], kS[2]}));
  d.terms.push_back(term(1.0, {kS[2], kS[1], kS[3]}));
  d.terms.push_back(term(1.0, {kS[3], kS[3], kS[3]}));
  e.certificate = d;
  e.matrix = reconstruct_matrix(d);
  // Whether the rank is seven or eight is open; both values stay on record.
  e.claimed_rank = {7, 8};
  e.summary = "unitary permutation gate of rank seven or eight (undecided)";
  return e;
}

GateEntry t_lemma2_entry() {
  GateEntry e;
  e.name = "T_lemma2";
  e.system_dims = {2, 2, 2};
  Decomposition d;
  d.terms.push_back(term(1.0, {kS[1], kS[3], kS[0]}));
  d.terms.push_back(term(1.0, {kS[2], kS[0], kS[1]}));
  d.terms.push_back(term(1.0, {kS[3], kS[2], kS[1]}));
  d.terms.push_back(term(1.0, {kS[1], kS[2], kS[2]}));
  d.terms.push_back(term(1.0, {kS[2], kS[1], kS[3]}));
  d.terms.push_back(term(1.0, {kS[3], kS[3], kS[3]}));
  e.certificate = d;
  e.matrix = reconstruct_matrix(d);
  e.claimed_rank = {6};
  e.claimed_unitary = false;
  e.summary = "non-unitary six-cell tensor, U8 minus its two S0⊗·⊗· terms, rank six";
  return e;
}

GateEntry finagler_entry() {
  GateEntry e;
  e.name = "finagler";
  e.system_dims = {2, 2, 2};
  Decomposition d;
  d.terms.push_back(term(kInvSqrt2, {kS[0], kI2, kI2}));
  d.terms.push_back(term(kInvSqrt2, {kS[1], kZ, kZ}));
  d.terms.push_back(term(kInvSqrt2, {kS[2], kX, kX}));
  d.terms.push_back(term(kInvSqrt2, {kS[3], kY, kY}));
  e.certificate = d;
  e.matrix = reconstruct_matrix(d);
  e.claimed_rank = {4};
  e.summary = "the finagler of the standard Cartan involution, rank four";
  return e;
}

GateEntry bullock16_entry() {
  GateEntry e;
  e.name = "bullock16";
  e.system_dims = {2, 2, 2, 2};
  const ComplexMatrix d1 = mat2(1, kI, 0, 0);
  const ComplexMatrix d2 = mat2(0, 0, 1, kI);
  const ComplexMatrix d3 = mat2(0, 0, 1, -kI);
  const ComplexMatrix d4 = mat2(-1, kI, 0, 0);
  Decomposition d;
  auto add = [&](double sign, int a, int b, int c, const ComplexMatrix& last) {
    d.terms.push_back(term(sign * kInvSqrt2, {kS[a], kS[b], kS[c], last}));
  };
  add(+1, 0, 0, 0, d1);
  add(+1, 0, 1, 2, d1);
  add(+1, 1, 2, 0, d1);
  add(+1, 1, 3, 2, d1);
  add(+1, 0, 0, 1, d2);
  add(+1, 0, 1, 3, d2);
  add(+1, 1, 2, 1, d2);
  add(+1, 1, 3, 3, d2);
  add(+1, 2, 2, 2, d3);
  add(-1, 2, 3, 0, d3);
  add(-1, 3, 0, 2, d3);
  add(+1, 3, 1, 0, d3);
  add(+1, 2, 2, 3, d4);
  add(-1, 2, 3, 1, d4);
  add(-1, 3, 0, 3, d4);
  add(+1, 3, 1, 1, d4);
  e.certificate = d;
  // The 1/sqrt2 is applied to all four blocks; scaling only the first block
  // breaks unitarity (claim C16 reports both readings).
  e.matrix = reconstruct_matrix(d);
  e.claimed_rank = {16};
  e.claim_is_upper_bound = true;
  e.summary = "four-qubit gate written as sixteen product terms (upper bound only)";
  return e;
}

// Coefficient relabelings carrying the three-CNOT tensor onto matmul_tensor():
// m3_tensor[a, b, c] = matmul_tensor[P1[a], P2[b], P3[c]]. Found by exhaustive
// search over all 24^3 permutation triples; checked by the certificate test.
constexpr int kM3PermA[4] = {0, 2, 3, 1};
constexpr int kM3PermB[4] = {0, 3, 2, 1};
constexpr int kM3PermC[4] = {0, 3, 2, 1};

Decomposition m3_certificate() {
  Decomposition out;
  for (const Term& t : strassen_certificate().terms) {
    ComplexMatrix a(4, 1), b(4, 1), c(4, 1);
    for (int x = 0; x < 4; ++x) {
      a(x, 0) = t.factors[0](kM3PermA[x], 0);
      b(x, 0) = t.factors[1](kM3PermB[x], 0);
      c(x, 0) = t.factors[2](kM3PermC[x], 0);
    }
    out.terms.push_back(term(t.weight, {a, b, c}));
  }
  return out;
}

GateEntry m3_entry() {
  GateEntry e;
  e.name = "M3";
  e.system_dims = {2, 2, 2};
  // cnot01 · cnot12 · cnot20, with cnot20 = I⊗I⊗S0 + X⊗I⊗S3 (control last qubit).
  ComplexMatrix cnot20 = kron(kron(kI2, kI2), kS[0]) + kron(kron(kX, kI2), kS[3]);
  e.matrix = kron(kCnot, kI2) * kron(kI2, kCnot) * cnot20;
  e.certificate = m3_certificate();
  e.claimed_rank = {7};
  e.summary = "three-CNOT product cnot01 · cnot12 · cnot20, rank seven";
  return e;
}

std::map<std::string, GateEntry> build_catalog() {
  std::map<std::string, GateEntry> m;
  auto put = [&](GateEntry e) { m.emplace(e.name, std::move(e)); };

  GateEntry e;
  e = elementary_entry("I2", {2}, kI2, true, "single-qubit identity");
  e.claimed_rank = {1};
  e.certificate = single_term_certificate(kI2);
  put(e);
  for (int i = 0; i < 4; ++i) {
    e = elementary_entry(fmt::format("S{}", i), {2}, kS[i], false,
                         fmt::format("matrix unit with the 1 at ({}, {})", i / 2, i % 2));
    e.claimed_rank = {1};
    e.certificate = single_term_certificate(kS[i]);
    put(e);
  }
  e = elementary_entry("X", {2}, kX, true, "Pauli X");
  e.claimed_rank = {1};
  e.certificate = single_term_certificate(kX);
  put(e);
  e = elementary_entry("Y", {2}, kY, true, "Pauli Y");
  e.claimed_rank = {1};
  e.certificate = single_term_certificate(kY);
  put(e);
  e = elementary_entry("Z", {2}, kZ, true, "Pauli Z");
  e.claimed_rank = {1};
  e.certificate = single_term_certificate(kZ);
  put(e);
  e = elementary_entry("H", {2}, kH, true, "Hadamard");
  e.claimed_rank = {1};
  e.certificate = single_term_certificate(kH);
  put(e);
  e = elementary_entry("CNOT", {2, 2}, kCnot, true, "controlled-NOT, control first");
  e.claimed_rank = {2};
  e.certificate = controlled_certificate(kX);
  put(e);
  e = elementary_entry("CZ", {2, 2}, kCz, true, "controlled-Z, control first");
  e.claimed_rank = {2};
  e.certificate = controlled_certificate(kZ);
  put(e);
  e = elementary_entry("SWAP", {2, 2}, kSwapGate, true, "two-qubit swap");
  e.claimed_rank = {4};
  e.certificate = swap_certificate();
  put(e);
  e = elementary_entry("TOFFOLI", {2, 2, 2}, kToffoli, true,
                       "doubly controlled NOT, controls first, rank two");
  e.claimed_rank = {2};
  e.certificate = toffoli_certificate();
  put(e);
  e = elementary_entry("FREDKIN", {2, 2, 2}, kFredkin, true,
                       "controlled swap, control first, rank four");
  e.claimed_rank = {4};
  e.certificate = fredkin_certificate();
  put(e);

  put(u3_pauli_entry());
  put(u3_circ_entry());
  put(u4_entry());
  put(u5_thm1_entry());
  put(u5_circ_entry());
  put(u6_thm1_entry());
  put(u6_circ_entry());
  put(u7_entry());
  put(u8_entry());
  put(t_lemma2_entry());
  put(finagler_entry());
  put(bullock16_entry());
  put(m3_entry());
  return m;
}

const std::map<std::string, GateEntry>& catalog() {
  static const std::map<std::string, GateEntry> m = build_catalog();
  return m;
}

}  // namespace

const std::vector<std::string>& elementary_names() {
  static const std::vector<std::string> names = {"I2", "S0",   "S1", "S2",   "S3",
                                                 "X",  "Y",    "Z",  "H",    "CNOT",
                                                 "CZ", "SWAP", "TOFFOLI", "FREDKIN"};
  return names;
}

const std::vector<std::string>& claimed_gate_names() {
  static const std::vector<std::string> names = {
      "U3_pauli", "U3_circ", "U4", "U5_thm1", "U5_circ",  "U6_thm1",   "U6_circ",
      "U7",       "U8",      "M3", "finagler", "bullock16", "T_lemma2"};
  return names;
}

const std::vector<std::string>& all_gate_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v = elementary_names();
    const auto& c = claimed_gate_names();
    v.insert(v.end(), c.begin(), c.end());
    return v;
  }();
  return names;
}

bool is_gate(const std::string& name) { return catalog().count(name) > 0; }

const ComplexMatrix& elementary(const std::string& name) {
  const auto& names = elementary_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument(fmt::format("'{}' is not an elementary gate", name));
  return gate(name).matrix;
}

const ComplexMatrix& matrix_unit(int i) {
  if (i < 0 || i > 3)
    throw std::invalid_argument(fmt::format("matrix_unit index must be in 0..3, got {}", i));
  return kS[i];
}

const GateEntry& gate(const std::string& name) {
  auto it = catalog().find(name);
  if (it == catalog().end())
    throw std::invalid_argument(fmt::format("unknown gate '{}'", name));
  return it->second;
}

const Tensor3& matmul_tensor() {
  static const Tensor3 t = [] {
    Tensor3 out(4, 4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) out.at(2 * i + j, 2 * j + k, 2 * k + i) = 1.0;
    return out;
  }();
  return t;
}

const Decomposition& strassen_certificate() {
  static const Decomposition d = [] {
    Decomposition out;
    auto add = [&](ComplexMatrix u, ComplexMatrix v, ComplexMatrix w) {
      out.terms.push_back(term(1.0, {std::move(u), std::move(v), std::move(w)}));
    };
    add(cvec4(1, 0, 0, 1), cvec4(1, 0, 0, 1), cvec4(1, 0, 0, 1));
    add(cvec4(0, 0, 1, 1), cvec4(1, 0, 0, 0), cvec4(0, 1, 0, -1));
    add(cvec4(1, 0, 0, 0), cvec4(0, 1, 0, -1), cvec4(0, 0, 1, 1));
    add(cvec4(0, 0, 0, 1), cvec4(-1, 0, 1, 0), cvec4(1, 1, 0, 0));
    add(cvec4(1, 1, 0, 0), cvec4(0, 0, 0, 1), cvec4(-1, 0, 1, 0));
    add(cvec4(-1, 0, 1, 0), cvec4(1, 1, 0, 0), cvec4(0, 0, 0, 1));
    add(cvec4(0, 1, 0, -1), cvec4(0, 0, 1, 1), cvec4(1, 0, 0, 0));
    return out;
  }();
  return d;
}

}  // namespace srank
