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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "srank/gate_catalog.hpp"
#include "srank/schmidt.hpp"

namespace srank {
namespace {

constexpr double kIdentityTol = 1e-12;
constexpr double kWitnessTol = 1e-10;
// An ALS failure only counts as negative evidence when the best residual
// clears this bar by a wide margin; see the negative-evidence checks.
constexpr double kEvidenceBar = 1e-4;
// Bar for asserting that a matrix is demonstrably NOT unitary.
constexpr double kNonUnitaryBar = 1e-6;
constexpr double kTwoPi = 6.283185307179586476925286766559;

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in (0, 1]; never 0, so the Box-Muller log below is safe.
double uniform01(std::mt19937_64& rng) { return ((rng() >> 11) + 1) * 0x1.0p-53; }

Complex complex_gaussian(std::mt19937_64& rng) {
  const double r = std::sqrt(-2.0 * std::log(uniform01(rng)));
  const double phi = kTwoPi * uniform01(rng);
  return {r * std::cos(phi), r * std::sin(phi)};
}

// Haar-distributed 2x2 unitary: QR of a complex Gaussian with the R diagonal
// rotated onto the positive real axis.
ComplexMatrix random_unitary2(std::mt19937_64& rng) {
  ComplexMatrix g(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) g(i, j) = complex_gaussian(rng);
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(2, 2);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 2; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

using Metrics = std::vector<std::pair<std::string, double>>;

ClaimCheck make_check(std::string desc, bool ok, Metrics metrics, std::string detail = {}) {
  ClaimCheck c;
  c.description = std::move(desc);
  c.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  c.metrics = std::move(metrics);
  c.detail = std::move(detail);
  return c;
}

ClaimCheck identity_check(std::string desc, const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  const double diff = max_abs(ComplexMatrix(lhs - rhs));
  return make_check(std::move(desc), diff <= kIdentityTol,
                    {{"max_abs_diff", diff}, {"tolerance", kIdentityTol}});
}

ClaimCheck unitarity_check(std::string desc, const ComplexMatrix& m) {
  const double dev = unitarity_deviation(m);
  return make_check(std::move(desc), dev <= kIdentityTol,
                    {{"unitarity_deviation", dev}, {"tolerance", kIdentityTol}});
}

void extend(std::vector<ClaimCheck>& dst, std::vector<ClaimCheck> src) {
  for (ClaimCheck& c : src) dst.push_back(std::move(c));
}

std::string perm_text(const std::array<int, 4>& p) {
  return fmt::format("[{}, {}, {}, {}]", p[0], p[1], p[2], p[3]);
}

std::string triple_text(const PermutationTriple& t) {
  return fmt::format("A {}, B {}, C {}", perm_text(t[0]), perm_text(t[1]), perm_text(t[2]));
}

// Checks shared by every rank claim: flattening ranks, certificate, and (for
// a single claimed value) the ALS evidence plus the combined verdict.
std::vector<ClaimCheck> standard_rank_checks(const RankReport& rep, std::array<int, 3> modes,
                                             int cert_len) {
  std::vector<ClaimCheck> out;
  const bool modes_ok = rep.mode_ranks == modes;
  out.push_back(make_check(
      fmt::format("{}: mode flattening ranks are ({}, {}, {})", rep.target, modes[0], modes[1],
                  modes[2]),
      modes_ok,
      {{"mode_rank_1", static_cast<double>(rep.mode_ranks[0])},
       {"mode_rank_2", static_cast<double>(rep.mode_ranks[1])},
       {"mode_rank_3", static_cast<double>(rep.mode_ranks[2])},
       {"proved_lower", static_cast<double>(rep.proved_lower)}}));
  if (cert_len > 0) {
    out.push_back(make_check(
        fmt::format("{}: {}-term certificate reconstructs the coefficient tensor", rep.target,
                    cert_len),
        rep.certified_upper == cert_len,
        {{"residual", rep.certificate_residual}, {"tolerance", kCertificateTol}}));
  }
  if (rep.claimed.size() != 1) return out;

  const int c = rep.claimed.front();
  if (rep.proved_lower == c && rep.certified_upper == c) {
    out.push_back(make_check(
        fmt::format("{}: rank {} is proved exactly (flattening bound meets the certificate)",
                    rep.target, c),
        true, {{"rank", static_cast<double>(c)}}));
  }
  {
    ClaimCheck k;
    k.description = fmt::format("{}: ALS reaches a rank-{} fit", rep.target, c);
    if (rep.als_upper == c) {
      k.status = CheckStatus::kPass;
      k.metrics = {{"residual", rep.als_upper_residual},
                   {"iterations", static_cast<double>(rep.als_upper_iterations)}};
    } else if (rep.als_upper >= 0) {
      k.status = CheckStatus::kOpenEvidence;
      k.metrics = {{"als_upper", static_cast<double>(rep.als_upper)},
                   {"residual", rep.als_upper_residual}};
      k.detail = fmt::format(
          "ALS already converged at rank {}; border effects can produce fits below the exact "
          "rank, so this neither confirms nor refutes the claim",
          rep.als_upper);
    } else {
      k.status = CheckStatus::kFail;
      k.detail = "no restart converged within the iteration budget";
    }
    out.push_back(std::move(k));
  }
  for (const AlsFailure& f : rep.als_failures) {
    if (f.rank >= c) continue;
    ClaimCheck k;
    k.description = fmt::format("{}: ALS finds no rank-{} fit over {} restarts (evidence, not proof)",
                                rep.target, f.rank, f.restarts);
    k.metrics = {{"best_residual", f.best_residual}, {"evidence_bar", kEvidenceBar}};
    if (f.best_residual > kEvidenceBar) {
      k.status = CheckStatus::kOpenEvidence;
    } else {
      k.status = CheckStatus::kFail;
      k.detail = "best residual sits at or below the evidence bar; the negative evidence is "
                 "inconclusive";
    }
    out.push_back(std::move(k));
  }
  out.push_back(make_check(
      fmt::format("{}: bounds and evidence are consistent with rank {}", rep.target, c),
      rep.verdict == Verdict::kConsistent,
      {{"proved_lower", static_cast<double>(rep.proved_lower)},
       {"certified_upper", static_cast<double>(rep.certified_upper)},
       {"als_upper", static_cast<double>(rep.als_upper)}}));
  return out;
}

void append_gate_rank_checks(std::vector<ClaimCheck>& out, const GateEntry& g,
                             std::array<int, 3> modes, const AlsConfig& cfg) {
  const RankReport rep = rank_search(operator_tensor3(g.matrix), &g.certificate, cfg,
                                     g.claimed_rank, g.name);
  extend(out, standard_rank_checks(rep, modes, static_cast<int>(g.certificate.terms.size())));
}

ComplexMatrix identity2() { return ComplexMatrix::Identity(2, 2); }

// CNOT with control on the first qubit and target on the third.
ComplexMatrix cnot02_embed() {
  return kron(kron(matrix_unit(0), identity2()), identity2()) +
         kron(kron(matrix_unit(3), identity2()), elementary("X"));
}

// CNOT with control on the third qubit and target on the first.
ComplexMatrix cnot20_embed() {
  return kron(kron(identity2(), identity2()), matrix_unit(0)) +
         kron(kron(elementary("X"), identity2()), matrix_unit(3));
}

// Eight-term expansion of (cnot01)(V1⊗W1⊗I)(cnot12)(V2⊗I⊗X2)(cnot02).
Decomposition s3_expansion(const ComplexMatrix& v1, const ComplexMatrix& w1,
                           const ComplexMatrix& v2, const ComplexMatrix& x2) {
  const ComplexMatrix& x = elementary("X");
  const ComplexMatrix s0 = matrix_unit(0);
  const ComplexMatrix s3 = matrix_unit(3);
  const ComplexMatrix vs0 = v1 * v2 * s0;
  const ComplexMatrix vs3 = v1 * v2 * s3;
  const ComplexMatrix w0 = w1 * s0;
  const ComplexMatrix w3 = w1 * s3;
  Decomposition d;
  auto add = [&](const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
    d.terms.push_back(Term{Complex(1.0, 0.0), {a, b, c}});
  };
  add(s0 * vs0, w0, x2);
  add(s3 * vs0, x * w0, x2);
  add(s0 * vs0, w3, x * x2);
  add(s3 * vs0, x * w3, x * x2);
  add(s0 * vs3, w0, x2 * x);
  add(s3 * vs3, x * w0, x2 * x);
  add(s0 * vs3, w3, x * x2 * x);
  add(s3 * vs3, x * w3, x * x2 * x);
  return d;
}

// Product form matching s3_expansion, with a configurable final gate so the
// orientation pin in C17 can test the reversed variant.
ComplexMatrix interleaved_product(const ComplexMatrix& v1, const ComplexMatrix& w1,
                                  const ComplexMatrix& v2, const ComplexMatrix& x2,
                                  const ComplexMatrix& last) {
  const ComplexMatrix& cnot = elementary("CNOT");
  const ComplexMatrix i2 = identity2();
  return kron(cnot, i2) * kron(kron(v1, w1), i2) * kron(i2, cnot) * kron(kron(v2, i2), x2) * last;
}

// Rank-two form of the two-CNOT sandwich, valid when the witness condition
// holds; unitarity then pins |l| = |n| = 1/sqrt2, so the divisions are safe.
Decomposition m1_rank2_certificate(const ComplexMatrix& w) {
  const Complex m = w(0, 0), n = w(0, 1), l = w(1, 0), p = w(1, 1);
  const ComplexMatrix s0 = matrix_unit(0);
  const ComplexMatrix s3 = matrix_unit(3);
  Decomposition d;
  d.terms.push_back(Term{Complex(1.0, 0.0), {s0 + (m / l) * s3, w * s0, identity2()}});
  d.terms.push_back(Term{Complex(1.0, 0.0), {s0 + (n / p) * s3, w * s3, elementary("X")}});
  return d;
}

// Four-term expansion of the two-CNOT sandwich; exact for every w.
Decomposition m1_rank4_certificate(const ComplexMatrix& w) {
  const ComplexMatrix& x = elementary("X");
  const ComplexMatrix s0 = matrix_unit(0);
  const ComplexMatrix s3 = matrix_unit(3);
  Decomposition d;
  d.terms.push_back(Term{Complex(1.0, 0.0), {s0, w * s0, identity2()}});
  d.terms.push_back(Term{Complex(1.0, 0.0), {s0, w * s3, x}});
  d.terms.push_back(Term{Complex(1.0, 0.0), {s3, x * w * s0, identity2()}});
  d.terms.push_back(Term{Complex(1.0, 0.0), {s3, x * w * s3, x}});
  return d;
}

const std::vector<std::array<int, 4>>& all_permutations4() {
  static const std::vector<std::array<int, 4>> perms = [] {
    std::vector<std::array<int, 4>> out;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

void require_4x4x4(const Tensor3& t, const char* who) {
  const std::array<int, 3> want{4, 4, 4};
  if (t.dims() != want) {
    throw std::invalid_argument(fmt::format("{}: tensors must be 4x4x4, got {}x{}x{}", who,
                                            t.dims()[0], t.dims()[1], t.dims()[2]));
  }
}

bool relabels_onto(const Tensor3& t1, const Tensor3& t2, const std::array<int, 4>& p1,
                   const std::array<int, 4>& p2, const std::array<int, 4>& p3) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        if (std::abs(t2.at(p1[i], p2[j], p3[k]) - t1.at(i, j, k)) > kIdentityTol) return false;
      }
    }
  }
  return true;
}

// --- Claim check builders -------------------------------------------------

std::vector<ClaimCheck> checks_c1(const AlsConfig& cfg) {
  const GateEntry& g = gate("TOFFOLI");
  const ComplexMatrix conj = kron(kron(identity2(), identity2()), elementary("H"));
  const ComplexMatrix reflect =
      ComplexMatrix::Identity(8, 8) -
      2.0 * kron(kron(matrix_unit(3), matrix_unit(3)), matrix_unit(3));
  std::vector<ClaimCheck> out;
  out.push_back(identity_check("TOFFOLI equals (I⊗I⊗H)(I - 2|111><111|)(I⊗I⊗H)",
                               conj * reflect * conj, g.matrix));
  out.push_back(unitarity_check("TOFFOLI is unitary", g.matrix));
  append_gate_rank_checks(out, g, {2, 2, 2}, cfg);
  return out;
}

std::vector<ClaimCheck> checks_c2(const AlsConfig& cfg) {
  const GateEntry& g = gate("FREDKIN");
  std::vector<ClaimCheck> out;
  out.push_back(identity_check("FREDKIN equals its four-term expansion",
                               reconstruct_matrix(g.certificate), g.matrix));
  out.push_back(unitarity_check("FREDKIN is unitary", g.matrix));
  append_gate_rank_checks(out, g, {2, 4, 4}, cfg);
  return out;
}

std::vector<ClaimCheck> checks_c3(const AlsConfig& cfg) {
  const GateEntry& g = gate("U3_circ");
  const ComplexMatrix circuit = kron(elementary("CNOT"), elementary("H")) *
                                elementary("TOFFOLI") *
                                kron(kron(identity2(), identity2()), elementary("H"));
  std::vector<ClaimCheck> out;
  out.push_back(identity_check("U3_circ equals (cnot01 ⊗ H) · TOFFOLI · (I⊗I⊗H)", circuit,
                               g.matrix));
  out.push_back(unitarity_check("U3_circ is unitary", g.matrix));
  append_gate_rank_checks(out, g, {2, 3, 2}, cfg);
  return out;
}

std::vector<ClaimCheck> checks_c4(const AlsConfig& cfg) {
  const GateEntry& g = gate("U3_pauli");
  std::vector<ClaimCheck> out;
  out.push_back(unitarity_check("U3_pauli is unitary", g.matrix));
  append_gate_rank_checks(out, g, {3, 3, 3}, cfg);
  return out;
}

std::vector<ClaimCheck> checks_c5(const AlsConfig& cfg) {
  const GateEntry& g = gate("U4");
  const ComplexMatrix& cnot = elementary("CNOT");
  std::vector<ClaimCheck> out;
  out.push_back(identity_check("U4 equals cnot01 · cnot12",
                               kron(cnot, identity2()) * kron(identity2(), cnot), g.matrix));
  out.push_back(identity_check("U4 equals its four-term expansion",
                               reconstruct_matrix(g.certificate), g.matrix));
  out.push_back(unitarity_check("U4 is unitary", g.matrix));
  append_gate_rank_checks(out, g, {2, 4, 2}, cfg);
  return out;
}

std::vector<ClaimCheck> checks_c6(const AlsConfig& cfg) {
  const GateEntry& g = gate("U5_thm1");
  std::vector<ClaimCheck> out;
  out.push_back(unitarity_check("U5_thm1 is unitary", g.matrix));
  append_gate_rank_checks(out, g, {2, 4, 4}, cfg);
  return out;
}

std::vector<ClaimCheck> checks_c7(const AlsConfig& cfg) {
  const GateEntry& g = gate("U5_circ");
  const ComplexMatrix circuit = kron(elementary("CNOT"), identity2()) * elementary("FREDKIN");
  std::vector<ClaimCheck> out;
  out.push_back(identity_check("U5_circ equals cnot01 · FREDKIN", circuit, g.matrix));
  out.push_back(identity_check("U5_circ equals its five-term expansion",
                               reconstruct_matrix(g.certificate), g.matrix));
  out.push_back(unitarity_check("U5_circ is unitary", g.matrix));
  append_gate_rank_checks(out, g, {2, 4, 4}, cfg);
  return out;
}

std::vector<ClaimCheck> checks_c8(const AlsConfig& cfg) {
  const GateEntry& g = gate("U6_thm1");
  std::vector<ClaimCheck> out;
  out.push_back(unitarity_check("U6_thm1 is unitary", g.matrix));
  append_gate_rank_checks(out, g, {2, 4, 4}, cfg);
  return out;
}

std::vector<ClaimCheck> checks_c9(const AlsConfig& cfg) {
  const GateEntry& g = gate("U6_circ");
  const ComplexMatrix circuit = cnot02_embed() *
                                kron(kron(elementary("H"), identity2()), identity2()) *
                                gate("U3_circ").matrix;
  std::vector<ClaimCheck> out;
  out.push_back(identity_check("U6_circ equals cnot02 · (H⊗I⊗I) · U3_circ", circuit, g.matrix));
  out.push_back(identity_check("U6_circ equals its six-term expansion",
                               reconstruct_matrix(g.certificate), g.matrix));
  out.push_back(unitarity_check("U6_circ is unitary", g.matrix));
  append_gate_rank_checks(out, g, {4, 3, 4}, cfg);
  return out;
}

std::vector<ClaimCheck> checks_c10(const AlsConfig& cfg) {
  const GateEntry& g = gate("U7");
  const Tensor3 t = operator_tensor3(g.matrix);
  std::vector<ClaimCheck> out;
  out.push_back(unitarity_check("U7 is unitary", g.matrix));

  const std::vector<PermutationTriple> isos = permutation_isomorphisms(t, matmul_tensor());
  {
    ClaimCheck k;
    k.description =
        "U7's coefficient tensor is a relabeling of the 2x2 matrix-multiplication tensor";
    k.status = isos.empty() ? CheckStatus::kFail : CheckStatus::kPass;
    k.metrics = {{"isomorphism_count", static_cast<double>(isos.size())}};
    if (!isos.empty()) {
      k.detail = fmt::format("first triple: {}", triple_text(isos.front()));
      // The relabeling was stated as a triple of permutations; both common
      // readings of that notation are checked against the exhaustive list.
      const std::array<int, 4> a_cycle{3, 0, 1, 2};
      const std::array<int, 4> a_oneline{3, 2, 1, 0};
      const std::array<int, 4> b_cycle{3, 1, 0, 2};
      const std::array<int, 4> c_swap{0, 3, 2, 1};
      std::vector<std::string> matched;
      const std::vector<PermutationTriple> reverse_isos =
          permutation_isomorphisms(matmul_tensor(), t);
      auto same_triple = [](const PermutationTriple& a, const PermutationTriple& b) {
        for (int m = 0; m < 3; ++m) {
          for (int i = 0; i < 4; ++i) {
            if (a[m][i] != b[m][i]) return false;
          }
        }
        return true;
      };
      auto contains = [&](const std::vector<PermutationTriple>& list,
                          const PermutationTriple& cand) {
        for (const PermutationTriple& item : list) {
          if (same_triple(item, cand)) return true;
        }
        return false;
      };
      auto probe = [&](const char* label, const std::array<int, 4>& pa) {
        const PermutationTriple cand{pa, b_cycle, c_swap};
        const bool fwd = contains(isos, cand);
        const bool rev = contains(reverse_isos, cand);
        if (fwd || rev) {
          matched.push_back(fmt::format("{} ({})", label, fwd ? "forward" : "reverse"));
        }
      };
      probe("first permutation read as a cycle", a_cycle);
      probe("first permutation read as one-line", a_oneline);
      k.detail += matched.empty()
                      ? "; neither reading of the stated triple appears in either orientation"
                      : fmt::format("; stated triple matched: {}", fmt::join(matched, ", "));
      k.metrics.emplace_back("stated_readings_matched", static_cast<double>(matched.size()));
    }
    out.push_back(std::move(k));
  }
  {
    const double strassen_res = verify_decomposition(matmul_tensor(), strassen_certificate());
    out.push_back(make_check(
        "the seven-term matrix-multiplication certificate transfers: rank(U7) <= 7",
        !isos.empty() && strassen_res <= kCertificateTol,
        {{"strassen_residual", strassen_res}, {"tolerance", kCertificateTol}}));
  }
  const RankReport rep = rank_search(t, &g.certificate, cfg, g.claimed_rank, g.name);
  extend(out, standard_rank_checks(rep, {4, 4, 4}, static_cast<int>(g.certificate.terms.size())));
  return out;
}

std::vector<ClaimCheck> checks_c11(const AlsConfig& cfg) {
  const GateEntry& g = gate("M3");
  const ComplexMatrix& cnot = elementary("CNOT");
  const ComplexMatrix product =
      kron(cnot, identity2()) * kron(identity2(), cnot) * cnot20_embed();
  const Tensor3 t = operator_tensor3(g.matrix);

  std::vector<ClaimCheck> out;
  out.push_back(identity_check("M3 equals the product cnot01 · cnot12 · cnot20", product,
                               g.matrix));
  out.push_back(unitarity_check("M3 is unitary", g.matrix));
  {
    const bool found = permutation_isomorphism(t, matmul_tensor()).has_value();
    out.push_back(make_check(
        "M3's coefficient tensor is a relabeling of the 2x2 matrix-multiplication tensor", found,
        {{"found", found ? 1.0 : 0.0}}));
  }
  const RankReport rep = rank_search(t, &g.certificate, cfg, g.claimed_rank, g.name);
  extend(out, standard_rank_checks(rep, {4, 4, 4}, static_cast<int>(g.certificate.terms.size())));

  // Hadamard-dressed variant: the same three-CNOT skeleton with V2 = X2 = H
  // and the final gate oriented control-first-system. Reported without a rank
  // claim of its own.
  const ComplexMatrix& h = elementary("H");
  const ComplexMatrix dressed = interleaved_product(identity2(), identity2(), h, h,
                                                    cnot02_embed());
  const Decomposition expansion = s3_expansion(identity2(), identity2(), h, h);
  out.push_back(identity_check("the Hadamard-dressed variant equals its eight-term expansion",
                               dressed, reconstruct_matrix(expansion)));
  const Tensor3 td = operator_tensor3(dressed);
  const RankReport drep = rank_search(td, &expansion, cfg, {}, "M3 dressed (V2 = X2 = H)");
  extend(out, standard_rank_checks(drep, {4, 4, 4}, 8));
  if (drep.als_upper >= 0) {
    out.push_back(make_check(
        fmt::format("dressed variant: ALS reaches a rank-{} fit (recorded; no claim attached)",
                    drep.als_upper),
        true,
        {{"residual", drep.als_upper_residual},
         {"iterations", static_cast<double>(drep.als_upper_iterations)}}));
  } else {
    out.push_back(make_check("dressed variant: ALS reaches a fit at some rank", false,
                             {{"als_upper", -1.0}},
                             "no restart converged at any rank up to the certificate bound"));
  }
  for (const AlsFailure& f : drep.als_failures) {
    ClaimCheck k;
    k.description = fmt::format(
        "dressed variant: ALS finds no rank-{} fit over {} restarts (evidence, not proof)", f.rank,
        f.restarts);
    k.status = f.best_residual > kEvidenceBar ? CheckStatus::kOpenEvidence : CheckStatus::kFail;
    k.metrics = {{"best_residual", f.best_residual}, {"evidence_bar", kEvidenceBar}};
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<ClaimCheck> checks_c12(const AlsConfig& cfg) {
  std::vector<ClaimCheck> out;
  {
    const M1Witness wit = classify_m1(elementary("H"));
    out.push_back(make_check("w = H satisfies the condition and predicts rank two",
                             wit.condition_holds && wit.predicted_rank == 2,
                             {{"predicted_rank", static_cast<double>(wit.predicted_rank)}}));
  }
  {
    const M1Witness wit = classify_m1(identity2());
    out.push_back(make_check("w = I fails the condition and predicts rank four",
                             !wit.condition_holds && wit.predicted_rank == 4,
                             {{"predicted_rank", static_cast<double>(wit.predicted_rank)}}));
  }
  out.push_back(identity_check("M1(I) collapses to the two-CNOT gate U4", m1_from(identity2()),
                               gate("U4").matrix));
  const SweepSummary s = random_m1_sweep(100, cfg.seed, cfg);
  out.push_back(make_check("every sampled two-CNOT gate has rank two or four",
                           s.outside_set == 0,
                           {{"samples", static_cast<double>(s.samples)},
                            {"rank_two", static_cast<double>(s.rank_two)},
                            {"rank_four", static_cast<double>(s.rank_four)},
                            {"outside_set", static_cast<double>(s.outside_set)}}));
  out.push_back(make_check(
      "flattening bound, explicit certificate, and ALS agree with the classifier on every sample",
      s.agreements == s.samples,
      {{"agreements", static_cast<double>(s.agreements)},
       {"max_certificate_residual", s.max_certificate_residual}}));
  return out;
}

std::vector<ClaimCheck> checks_c13(const AlsConfig& cfg) {
  const GateEntry& g = gate("T_lemma2");
  Tensor3 sliced = operator_tensor3(gate("U8").matrix);
  for (int b = 0; b < 4; ++b) {
    for (int c = 0; c < 4; ++c) sliced.at(0, b, c) = Complex(0.0, 0.0);
  }
  std::vector<ClaimCheck> out;
  {
    const double diff = max_abs_diff(sliced, operator_tensor3(g.matrix));
    out.push_back(make_check("removing U8's first-mode S0 slice leaves T_lemma2's tensor",
                             diff <= kIdentityTol,
                             {{"max_abs_diff", diff}, {"tolerance", kIdentityTol}}));
  }
  append_gate_rank_checks(out, g, {3, 4, 4}, cfg);
  return out;
}

std::vector<ClaimCheck> checks_c14(const AlsConfig& cfg) {
  const GateEntry& g = gate("U8");
  const Tensor3 t = operator_tensor3(g.matrix);
  std::vector<ClaimCheck> out;
  out.push_back(unitarity_check("U8 is unitary", g.matrix));
  const RankReport rep = rank_search(t, &g.certificate, cfg, g.claimed_rank, g.name);
  extend(out, standard_rank_checks(rep, {4, 4, 4}, static_cast<int>(g.certificate.terms.size())));
  for (const AlsFailure& f : rep.als_failures) {
    if (f.rank >= 7) continue;
    ClaimCheck k;
    k.description = fmt::format(
        "U8: ALS finds no rank-{} fit over {} restarts (evidence, not proof)", f.rank, f.restarts);
    k.status = f.best_residual > kEvidenceBar ? CheckStatus::kOpenEvidence : CheckStatus::kFail;
    k.metrics = {{"best_residual", f.best_residual}, {"evidence_bar", kEvidenceBar}};
    out.push_back(std::move(k));
  }
  // The rank-seven outcome is recorded either way; neither branch adjudicates
  // the open question, and no expected value is asserted.
  if (rep.als_upper == 7) {
    out.push_back(make_check(
        "U8: ALS reaches a rank-7 fit (recorded as numerical evidence only)", true,
        {{"residual", rep.als_upper_residual},
         {"iterations", static_cast<double>(rep.als_upper_iterations)}},
        "border effects can produce fits below the exact rank, so the claim set stays {7, 8}"));
  } else {
    const auto it = std::find_if(rep.als_failures.begin(), rep.als_failures.end(),
                                 [](const AlsFailure& f) { return f.rank == 7; });
    ClaimCheck k;
    k.description = "U8: ALS finds no rank-7 fit (evidence, not proof)";
    k.status = CheckStatus::kOpenEvidence;
    if (it != rep.als_failures.end()) {
      k.metrics = {{"best_residual", it->best_residual}, {"evidence_bar", kEvidenceBar}};
    }
    out.push_back(std::move(k));
  }
  out.push_back(make_check("U8: the open claim {7, 8} stays inside the proved bounds",
                           rep.verdict == Verdict::kOpen,
                           {{"proved_lower", static_cast<double>(rep.proved_lower)},
                            {"certified_upper", static_cast<double>(rep.certified_upper)}}));
  return out;
}

std::vector<ClaimCheck> checks_c15(const AlsConfig& cfg) {
  const GateEntry& g = gate("finagler");
  std::vector<ClaimCheck> out;
  out.push_back(unitarity_check("finagler is unitary", g.matrix));
  append_gate_rank_checks(out, g, {4, 4, 4}, cfg);
  return out;
}

std::vector<ClaimCheck> checks_c16(const AlsConfig&) {
  const GateEntry& g = gate("bullock16");
  std::vector<ClaimCheck> out;
  out.push_back(identity_check("bullock16 equals its sixteen-term product expansion",
                               reconstruct_matrix(g.certificate), g.matrix));
  out.push_back(
      unitarity_check("with the 1/sqrt2 applied to all sixteen terms the gate is unitary",
                      g.matrix));
  // Literal variant: keep 1/sqrt2 on the leading four-term block only.
  Decomposition literal = g.certificate;
  for (std::size_t k = 4; k < literal.terms.size(); ++k) {
    literal.terms[k].weight *= std::sqrt(2.0);
  }
  const double dev = unitarity_deviation(reconstruct_matrix(literal));
  out.push_back(make_check("scaling only the leading four-term block breaks unitarity",
                           dev > kNonUnitaryBar,
                           {{"unitarity_deviation", dev}, {"bar", kNonUnitaryBar}},
                           "the sixteen-term sum is unitary only under the global 1/sqrt2"));
  return out;
}

std::vector<ClaimCheck> checks_c17(const AlsConfig& cfg) {
  std::mt19937_64 rng(splitmix64(cfg.seed ^ 0x53f1c17ULL));
  const ComplexMatrix fwd = cnot02_embed();
  const ComplexMatrix rev = cnot20_embed();
  const int kSamples = 20;
  double worst = 0.0;
  double alt_min = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kSamples; ++k) {
    const ComplexMatrix v1 = random_unitary2(rng);
    const ComplexMatrix w1 = random_unitary2(rng);
    const ComplexMatrix v2 = random_unitary2(rng);
    const ComplexMatrix x2 = random_unitary2(rng);
    const ComplexMatrix rhs = reconstruct_matrix(s3_expansion(v1, w1, v2, x2));
    worst = std::max(worst, max_abs(ComplexMatrix(interleaved_product(v1, w1, v2, x2, fwd) - rhs)));
    alt_min =
        std::min(alt_min, max_abs(ComplexMatrix(interleaved_product(v1, w1, v2, x2, rev) - rhs)));
  }
  std::vector<ClaimCheck> out;
  out.push_back(make_check(
      "the eight-term expansion matches the gate product for 20 random local-unitary dressings",
      worst <= kIdentityTol,
      {{"max_abs_diff", worst}, {"samples", static_cast<double>(kSamples)}}));
  out.push_back(make_check(
      "the expansion pins the final gate orientation: control on the first system", alt_min > 0.1,
      {{"min_abs_diff_reversed", alt_min}},
      "with the final gate reversed the identity fails for every sample"));
  return out;
}

struct ClaimEntry {
  const char* statement;
  std::vector<ClaimCheck> (*build)(const AlsConfig&);
};

const std::map<std::string, ClaimEntry>& registry() {
  static const std::map<std::string, ClaimEntry> reg = {
      {"C1",
       {"The doubly-controlled NOT (TOFFOLI) equals (I⊗I⊗H)(I - 2|111><111|)(I⊗I⊗H) and has "
        "Schmidt rank two.",
        checks_c1}},
      {"C2",
       {"The controlled SWAP (FREDKIN) equals its four-term expansion and has Schmidt rank four.",
        checks_c2}},
      {"C3",
       {"U3_circ = (cnot01 ⊗ H) · TOFFOLI · (I⊗I⊗H) equals its three-term form and has Schmidt "
        "rank three.",
        checks_c3}},
      {"C4",
       {"U3_pauli = (1/sqrt3)(I⊗I⊗I + i X⊗X⊗X + i Z⊗Z⊗Z) is unitary and has Schmidt rank three.",
        checks_c4}},
      {"C5", {"U4 = cnot01 · cnot12 has Schmidt rank four.", checks_c5}},
      {"C6", {"U5_thm1, block diag(SWAP, I⊗X), is unitary and has Schmidt rank five.", checks_c6}},
      {"C7",
       {"U5_circ = cnot01 · FREDKIN equals its five-term form and has Schmidt rank five.",
        checks_c7}},
      {"C8",
       {"U6_thm1, block diag(SWAP, (I⊗X + Y⊗Z)/sqrt2), is unitary and has Schmidt rank six.",
        checks_c8}},
      {"C9",
       {"U6_circ = cnot02 · (H⊗I⊗I) · U3_circ equals its six-term form and has Schmidt rank six.",
        checks_c9}},
      {"C10",
       {"U7's coefficient tensor is a relabeling of the 2x2 matrix-multiplication tensor and has "
        "Schmidt rank seven.",
        checks_c10}},
      {"C11",
       {"M3 = cnot01 · cnot12 · cnot20 has Schmidt rank seven; the Hadamard-dressed variant is "
        "reported alongside.",
        checks_c11}},
      {"C12",
       {"A two-CNOT sandwich (cnot01)(I⊗w⊗I)(cnot12) has Schmidt rank two when m^2 = l^2 and "
        "n^2 = p^2, else four.",
        checks_c12}},
      {"C13",
       {"T_lemma2, the six-cell slice of U8's tensor, has tensor rank six.", checks_c13}},
      {"C14", {"U8 has Schmidt rank seven or eight; the exact value is open.", checks_c14}},
      {"C15",
       {"finagler = (1/sqrt2)(S0⊗I⊗I + S1⊗Z⊗Z + S2⊗X⊗X + S3⊗Y⊗Y) is unitary and has Schmidt "
        "rank four.",
        checks_c15}},
      {"C16",
       {"bullock16 equals its sixteen-term expansion; the 1/sqrt2 must scale all four blocks for "
        "unitarity.",
        checks_c16}},
      {"C17",
       {"(cnot01)(V1⊗W1⊗I)(cnot12)(V2⊗I⊗X2)(cnot02) equals its eight-term expansion for all "
        "local unitaries.",
        checks_c17}},
  };
  return reg;
}

}  // namespace

std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kOpenEvidence:
      return "OPEN-EVIDENCE";
  }
  return "UNKNOWN";
}

AlsConfig verification_config(uint64_t seed) {
  AlsConfig cfg;
  cfg.max_iters = 4000;
  cfg.seed = seed;
  return cfg;
}

ComplexMatrix m1_from(const ComplexMatrix& w) {
  if (w.rows() != 2 || w.cols() != 2) {
    throw std::invalid_argument(
        fmt::format("m1_from: w must be 2x2, got {}x{}", w.rows(), w.cols()));
  }
  const ComplexMatrix& cnot = elementary("CNOT");
  const ComplexMatrix i2 = identity2();
  return kron(cnot, i2) * kron(i2, kron(w, i2)) * kron(i2, cnot);
}

M1Witness classify_m1(const ComplexMatrix& w) {
  if (w.rows() != 2 || w.cols() != 2) {
    throw std::invalid_argument(
        fmt::format("classify_m1: w must be 2x2, got {}x{}", w.rows(), w.cols()));
  }
  const double dev = unitarity_deviation(w);
  if (dev > kWitnessTol) {
    throw std::invalid_argument(
        fmt::format("classify_m1: w must be unitary, deviation {:.3e}", dev));
  }
  M1Witness out;
  out.w = w;
  const Complex m = w(0, 0), n = w(0, 1), l = w(1, 0), p = w(1, 1);
  out.condition_holds =
      std::abs(m * m - l * l) <= kWitnessTol && std::abs(n * n - p * p) <= kWitnessTol;
  out.predicted_rank = out.condition_holds ? 2 : 4;
  return out;
}

SweepSummary random_m1_sweep(int n_samples, uint64_t seed, const AlsConfig& cfg) {
  if (n_samples < 1) {
    throw std::invalid_argument(
        fmt::format("random_m1_sweep: n_samples must be >= 1, got {}", n_samples));
  }
  std::mt19937_64 rng(splitmix64(seed ^ 0x9d1ce2f0ULL));
  SweepSummary s;
  s.samples = n_samples;
  for (int k = 0; k < n_samples; ++k) {
    const ComplexMatrix w = random_unitary2(rng);
    const M1Witness wit = classify_m1(w);
    const Tensor3 t = operator_tensor3(m1_from(w));
    const int lower = flattening_lower_bound(t);
    const Decomposition cert =
        wit.predicted_rank == 2 ? m1_rank2_certificate(w) : m1_rank4_certificate(w);
    const double residual = verify_decomposition(t, cert);
    s.max_certificate_residual = std::max(s.max_certificate_residual, residual);

    AlsConfig sample_cfg = cfg;
    sample_cfg.seed = splitmix64(seed + static_cast<uint64_t>(k) + 1);
    const AlsResult fit = als_fit(t, wit.predicted_rank, sample_cfg);

    const bool determined = lower == wit.predicted_rank && residual <= kCertificateTol;
    if (determined && fit.converged) ++s.agreements;
    if (determined && wit.predicted_rank == 2) {
      ++s.rank_two;
    } else if (determined && wit.predicted_rank == 4) {
      ++s.rank_four;
    } else {
      ++s.outside_set;
    }
  }
  return s;
}

std::optional<PermutationTriple> permutation_isomorphism(const Tensor3& t1, const Tensor3& t2) {
  require_4x4x4(t1, "permutation_isomorphism");
  require_4x4x4(t2, "permutation_isomorphism");
  for (const auto& p1 : all_permutations4()) {
    for (const auto& p2 : all_permutations4()) {
      for (const auto& p3 : all_permutations4()) {
        if (relabels_onto(t1, t2, p1, p2, p3)) return PermutationTriple{p1, p2, p3};
      }
    }
  }
  return std::nullopt;
}

std::vector<PermutationTriple> permutation_isomorphisms(const Tensor3& t1, const Tensor3& t2) {
  require_4x4x4(t1, "permutation_isomorphisms");
  require_4x4x4(t2, "permutation_isomorphisms");
  std::vector<PermutationTriple> out;
  for (const auto& p1 : all_permutations4()) {
    for (const auto& p2 : all_permutations4()) {
      for (const auto& p3 : all_permutations4()) {
        if (relabels_onto(t1, t2, p1, p2, p3)) out.push_back(PermutationTriple{p1, p2, p3});
      }
    }
  }
  return out;
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (int k = 1; k <= 17; ++k) out.push_back(fmt::format("C{}", k));
    return out;
  }();
  return ids;
}

ClaimReport verify_claim(const std::string& id, const AlsConfig& cfg) {
  const auto it = registry().find(id);
  if (it == registry().end()) {
    throw std::invalid_argument(fmt::format("unknown claim id '{}'", id));
  }
  ClaimReport r;
  r.id = id;
  r.statement = it->second.statement;
  r.checks = it->second.build(cfg);
  r.overall = CheckStatus::kPass;
  for (const ClaimCheck& c : r.checks) {
    if (c.status == CheckStatus::kFail) {
      r.overall = CheckStatus::kFail;
      break;
    }
    if (c.status == CheckStatus::kOpenEvidence) r.overall = CheckStatus::kOpenEvidence;
  }
  return r;
}

std::vector<ClaimReport> verify_all(const AlsConfig& cfg) {
  std::vector<ClaimReport> out;
  for (const std::string& id : claim_ids()) out.push_back(verify_claim(id, cfg));
  return out;
}

}  // namespace srank
