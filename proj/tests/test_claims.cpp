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

#include "srank/claims.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "srank/gate_catalog.hpp"
#include "srank/schmidt.hpp"

namespace srank {
namespace {

TEST_SUITE("claims") {

TEST_CASE("the registry enumerates C1 through C17") {
  const std::vector<std::string>& ids = claim_ids();
  REQUIRE(ids.size() == 17);
  CHECK(ids.front() == "C1");
  CHECK(ids.back() == "C17");
  CHECK_THROWS_AS(verify_claim("C99", {}), std::invalid_argument);
}

TEST_CASE("status names are stable") {
  CHECK(check_status_name(CheckStatus::kPass) == "PASS");
  CHECK(check_status_name(CheckStatus::kFail) == "FAIL");
  CHECK(check_status_name(CheckStatus::kOpenEvidence) == "OPEN-EVIDENCE");
}

TEST_CASE("verification_config widens only the iteration budget") {
  const AlsConfig cfg = verification_config(7);
  const AlsConfig def;
  CHECK(cfg.max_iters == 4000);
  CHECK(cfg.restarts == def.restarts);
  CHECK(cfg.converge_residual == def.converge_residual);
  CHECK(cfg.stall_window == def.stall_window);
  CHECK(cfg.stall_delta == def.stall_delta);
  CHECK(cfg.seed == 7);
}

TEST_CASE("proved claims come back PASS") {
  const ClaimReport c5 = verify_claim("C5", verification_config());
  CHECK(c5.id == "C5");
  CHECK(c5.overall == CheckStatus::kPass);
  for (const ClaimCheck& c : c5.checks) CHECK(c.status == CheckStatus::kPass);

  const ClaimReport c16 = verify_claim("C16", verification_config());
  CHECK(c16.overall == CheckStatus::kPass);
}

TEST_CASE("ALS-backed negative evidence is reported open, not proved") {
  const ClaimReport c13 = verify_claim("C13", verification_config());
  CHECK(c13.overall == CheckStatus::kOpenEvidence);
  bool saw_open = false;
  for (const ClaimCheck& c : c13.checks) {
    CHECK(c.status != CheckStatus::kFail);
    saw_open = saw_open || c.status == CheckStatus::kOpenEvidence;
  }
  CHECK(saw_open);
}

TEST_CASE("the two-CNOT sandwich with identity witness is the double CNOT") {
  const ComplexMatrix m1 = m1_from(ComplexMatrix::Identity(2, 2));
  CHECK(max_abs(ComplexMatrix(m1 - gate("U4").matrix)) <= 1e-12);
}

TEST_CASE("witness classifier separates the rank-two locus") {
  const M1Witness h = classify_m1(elementary("H"));
  CHECK(h.condition_holds);
  CHECK(h.predicted_rank == 2);

  const M1Witness id = classify_m1(ComplexMatrix::Identity(2, 2));
  CHECK_FALSE(id.condition_holds);
  CHECK(id.predicted_rank == 4);

  // Classifier prediction matches the measured flattening bound in both cases.
  CHECK(mode_ranks(operator_tensor3(m1_from(elementary("H"))))[1] == 2);
  CHECK(mode_ranks(operator_tensor3(m1_from(ComplexMatrix::Identity(2, 2))))[1] == 4);

  CHECK_THROWS_AS(classify_m1(2.0 * ComplexMatrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("a short witness sweep proves every sampled rank") {
  const SweepSummary s = random_m1_sweep(5, 1, verification_config(1));
  CHECK(s.samples == 5);
  CHECK(s.agreements == 5);
  CHECK(s.outside_set == 0);
  CHECK(s.rank_two + s.rank_four == 5);
  CHECK(s.max_certificate_residual <= 1e-12);
}

TEST_CASE("relabeling search finds the pinned first isomorphism") {
  const Tensor3 u7 = operator_tensor3(gate("U7").matrix);
  const auto found = permutation_isomorphism(u7, matmul_tensor());
  REQUIRE(found.has_value());
  const PermutationTriple want{{{0, 3, 2, 1}, {0, 2, 3, 1}, {3, 0, 1, 2}}};
  CHECK(*found == want);

  // The identity relabeling maps any tensor onto itself and sorts first.
  const auto self = permutation_isomorphism(matmul_tensor(), matmul_tensor());
  REQUIRE(self.has_value());
  const PermutationTriple identity{{{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}}};
  CHECK(*self == identity);
}

TEST_CASE("all eight relabelings onto the multiplication tensor are found") {
  const Tensor3 u7 = operator_tensor3(gate("U7").matrix);
  const std::vector<PermutationTriple> all = permutation_isomorphisms(u7, matmul_tensor());
  CHECK(all.size() == 8);
  // Every reported triple actually relabels u7 onto the target.
  for (const PermutationTriple& p : all) {
    double worst = 0.0;
    const Tensor3& target = matmul_tensor();
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
          worst = std::max(worst,
                           std::abs(target.at(p[0][i], p[1][j], p[2][k]) - u7.at(i, j, k)));
        }
      }
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("relabeling search requires 4x4x4 tensors") {
  CHECK_THROWS_AS(permutation_isomorphism(Tensor3(2, 2, 2), matmul_tensor()),
                  std::invalid_argument);
}

}  // TEST_SUITE

}  // namespace
}  // namespace srank
