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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "srank/schmidt.hpp"

namespace srank {
namespace {

TEST_SUITE("gate_catalog") {

TEST_CASE("elementary gates match their defining matrices") {
  const ComplexMatrix& cnot = elementary("CNOT");
  REQUIRE(cnot.rows() == 4);
  ComplexMatrix want(4, 4);
  want.setZero();
  want(0, 0) = want(1, 1) = want(2, 3) = want(3, 2) = Complex(1, 0);
  CHECK(max_abs(ComplexMatrix(cnot - want)) == 0.0);

  for (int i = 0; i < 4; ++i) {
    const ComplexMatrix& s = matrix_unit(i);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        CHECK(s(r, c) == (r == i / 2 && c == i % 2 ? Complex(1, 0) : Complex(0, 0)));
      }
    }
  }

  CHECK_THROWS_AS(elementary("nope"), std::invalid_argument);
  CHECK_THROWS_AS(gate("nope"), std::invalid_argument);
  CHECK(is_gate("U7"));
  CHECK_FALSE(is_gate("nope"));
}

TEST_CASE("every catalog name resolves to a consistently shaped entry") {
  for (const std::string& name : all_gate_names()) {
    const GateEntry& g = gate(name);
    CHECK(g.name == name);
    int dim = 1;
    for (int d : g.system_dims) dim *= d;
    CHECK(g.matrix.rows() == dim);
    CHECK(g.matrix.cols() == dim);
    CHECK_FALSE(g.summary.empty());
  }
  // The two name lists partition all_gate_names in order.
  const auto& all = all_gate_names();
  const auto& el = elementary_names();
  const auto& cl = claimed_gate_names();
  REQUIRE(all.size() == el.size() + cl.size());
  CHECK(std::equal(el.begin(), el.end(), all.begin()));
  CHECK(std::equal(cl.begin(), cl.end(), all.begin() + el.size()));
}

TEST_CASE("claimed ranks and certificate lengths are pinned") {
  const std::map<std::string, std::vector<int>> claimed = {
      {"TOFFOLI", {2}},  {"FREDKIN", {4}}, {"U3_circ", {3}}, {"U3_pauli", {3}},
      {"U4", {4}},       {"U5_thm1", {5}}, {"U5_circ", {5}}, {"U6_thm1", {6}},
      {"U6_circ", {6}},  {"U7", {7}},      {"U8", {7, 8}},   {"M3", {7}},
      {"T_lemma2", {6}}, {"finagler", {4}}, {"bullock16", {16}}};
  for (const auto& [name, want] : claimed) {
    CHECK(gate(name).claimed_rank == want);
  }
  CHECK(gate("bullock16").claim_is_upper_bound);
  CHECK_FALSE(gate("U8").claim_is_upper_bound);

  const std::map<std::string, std::size_t> cert_len = {
      {"TOFFOLI", 2}, {"FREDKIN", 4},  {"U4", 4},       {"U5_thm1", 5}, {"U5_circ", 5},
      {"U6_thm1", 6}, {"U6_circ", 6},  {"U7", 8},       {"U8", 8},      {"M3", 7},
      {"T_lemma2", 6}, {"finagler", 4}, {"bullock16", 16}};
  for (const auto& [name, want] : cert_len) {
    CHECK(gate(name).certificate.terms.size() == want);
  }
}

TEST_CASE("unitarity flags are truthful") {
  for (const std::string& name : all_gate_names()) {
    const GateEntry& g = gate(name);
    if (g.claimed_unitary) {
      CHECK(unitarity_deviation(g.matrix) <= 1e-12);
    } else {
      CHECK(unitarity_deviation(g.matrix) > 1e-6);
    }
  }
  CHECK_FALSE(gate("T_lemma2").claimed_unitary);
}

TEST_CASE("U7 is the pinned basis-state permutation") {
  const ComplexMatrix& u = gate("U7").matrix;
  const std::map<int, int> row_to_col = {{0, 1}, {1, 6}, {2, 4}, {3, 3},
                                         {4, 7}, {5, 0}, {6, 2}, {7, 5}};
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const Complex want = row_to_col.at(r) == c ? Complex(1, 0) : Complex(0, 0);
      CHECK(u(r, c) == want);
    }
  }
}

TEST_CASE("U8 is the pinned basis-state permutation") {
  const ComplexMatrix& u = gate("U8").matrix;
  const std::map<int, int> row_to_col = {{0, 0}, {1, 2}, {2, 6}, {3, 4},
                                         {4, 1}, {5, 3}, {6, 5}, {7, 7}};
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const Complex want = row_to_col.at(r) == c ? Complex(1, 0) : Complex(0, 0);
      CHECK(u(r, c) == want);
    }
  }
}

TEST_CASE("every bundled certificate reconstructs its gate exactly") {
  // Coefficient-space comparison covers both factor conventions: 2x2 matrix
  // triples and length-4 coefficient vectors (the M3 schedule pullback).
  std::vector<std::string> names = claimed_gate_names();
  names.push_back("TOFFOLI");
  names.push_back("FREDKIN");
  for (const std::string& name : names) {
    CAPTURE(name);
    const GateEntry& g = gate(name);
    REQUIRE_FALSE(g.certificate.terms.empty());
    if (g.certificate.terms[0].factors[0].cols() == 1) {
      const Tensor3 rebuilt = reconstruct_cp(g.certificate, {4, 4, 4});
      CHECK(max_abs_diff(rebuilt, operator_tensor3(g.matrix)) <= 1e-12);
    } else {
      CHECK(max_abs(ComplexMatrix(reconstruct_matrix(g.certificate) - g.matrix)) <= 1e-12);
    }
  }
}

TEST_CASE("matmul tensor has the eight structural ones") {
  const Tensor3& t = matmul_tensor();
  REQUIRE(t.dims() == std::array<int, 3>{4, 4, 4});
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        // Nonzero exactly when e_ij e_jk e_ki chain, i.e. a=2i+j, b=2j+k, c=2k+i.
        const int i = a / 2, j = a % 2, jj = b / 2, k = b % 2, kk = c / 2, ii = c % 2;
        const bool on = (j == jj && k == kk && i == ii);
        CHECK(t.at(a, b, c) == (on ? Complex(1, 0) : Complex(0, 0)));
      }
    }
  }
}

TEST_CASE("Strassen schedule is a seven-term sign certificate for matmul") {
  const Decomposition& d = strassen_certificate();
  REQUIRE(d.terms.size() == 7);
  for (const Term& term : d.terms) {
    CHECK(term.weight == Complex(1, 0));
    REQUIRE(term.factors.size() == 3);
    for (const ComplexMatrix& f : term.factors) {
      REQUIRE(f.size() == 4);
      for (Eigen::Index i = 0; i < f.size(); ++i) {
        const double re = f(i).real();
        CHECK(f(i).imag() == 0.0);
        CHECK((re == 0.0 || re == 1.0 || re == -1.0));
      }
    }
  }
  CHECK(max_abs_diff(reconstruct_cp(d, {4, 4, 4}), matmul_tensor()) <= 1e-15);
}

}  // TEST_SUITE

}  // namespace
}  // namespace srank
