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

// Acceptance gate: ten release criteria, one pass/fail line each, nonzero
// exit if any fails. Every numeric bar is checked at its stated tolerance;
// heuristic evidence (ALS stalls) is labeled as such and never promoted to
// proof. Where the suite and the claim registry overlap, this binary
// recomputes from the public API instead of trusting registry internals.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "srank/circuit.hpp"
#include "srank/claims.hpp"
#include "srank/cli.hpp"
#include "srank/cp_als.hpp"
#include "srank/gate_catalog.hpp"
#include "srank/schmidt.hpp"

namespace srank {
namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& line) { notes.push_back(line); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double frob_diff(const Tensor3& a, const Tensor3& b) {
  double sum = 0.0;
  for (int i = 0; i < a.dims()[0]; ++i) {
    for (int j = 0; j < a.dims()[1]; ++j) {
      for (int k = 0; k < a.dims()[2]; ++k) sum += std::norm(a.at(i, j, k) - b.at(i, j, k));
    }
  }
  return std::sqrt(sum);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

Complex gaussian(std::mt19937_64& rng) {
  const double u = uniform01(rng);
  const double v = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log(u));
  const double a = 2.0 * M_PI * v;
  return Complex(r * std::cos(a), r * std::sin(a));
}

ComplexMatrix random_unitary2(std::mt19937_64& rng) {
  ComplexMatrix g(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) g(i, j) = gaussian(rng);
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 2; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

ComplexMatrix i2() { return ComplexMatrix::Identity(2, 2); }

// CNOT embedded on three qubits, control first wire, target third.
ComplexMatrix cnot02() {
  return kron(kron(matrix_unit(0), i2()), i2()) +
         kron(kron(matrix_unit(3), i2()), elementary("X"));
}

// CNOT embedded on three qubits, control third wire, target first.
ComplexMatrix cnot20() {
  return kron(kron(i2(), i2()), matrix_unit(0)) +
         kron(kron(elementary("X"), i2()), matrix_unit(3));
}

// --- criteria ---------------------------------------------------------------

// 1. Every gate the catalog marks unitary is unitary to 1e-12.
Outcome criterion_unitarity() {
  Outcome o;
  double worst = 0.0;
  std::string worst_name = "-";
  int checked = 0;
  for (const std::string& name : all_gate_names()) {
    const GateEntry& g = gate(name);
    if (!g.claimed_unitary) continue;
    ++checked;
    const double dev = unitarity_deviation(g.matrix);
    if (dev > worst) {
      worst = dev;
      worst_name = name;
    }
  }
  for (const char* must : {"U3_pauli", "U5_thm1", "U6_thm1", "U7", "U8", "finagler", "M3",
                           "TOFFOLI", "FREDKIN"}) {
    o.require(gate(must).claimed_unitary, fmt::format("{} should be marked unitary", must));
  }
  o.require(worst <= 1e-12,
            fmt::format("worst unitarity deviation {:.3e} ({}) above 1e-12", worst, worst_name));
  o.note(fmt::format("{} gates checked, worst deviation {:.3e} ({})", checked, worst, worst_name));
  return o;
}

// 2. Every bundled certificate reconstructs its tensor to 1e-12 (absolute
//    Frobenius), at the pinned term counts.
Outcome criterion_certificates() {
  Outcome o;
  const std::vector<std::pair<std::string, int>> entries = {
      {"U5_thm1", 5}, {"U6_thm1", 6},  {"U7", 8},       {"U8", 8},
      {"FREDKIN", 4}, {"finagler", 4}, {"bullock16", 16}};
  for (const auto& [name, terms] : entries) {
    const GateEntry& g = gate(name);
    o.require(static_cast<int>(g.certificate.terms.size()) == terms,
              fmt::format("{} certificate should have {} terms", name, terms));
    // bullock16 acts on four qubits; its certificate reconstructs the matrix
    // directly. The three-qubit ones reconstruct the coefficient tensor.
    const double resid =
        g.matrix.rows() == 8
            ? frob_diff(reconstruct_cp(g.certificate, {4, 4, 4}), operator_tensor3(g.matrix))
            : frobenius(ComplexMatrix(reconstruct_matrix(g.certificate) - g.matrix));
    o.require(resid <= 1e-12,
              fmt::format("{} certificate residual {:.3e} above 1e-12", name, resid));
    o.note(fmt::format("{}: {} terms, residual {:.3e}", name, terms, resid));
  }
  const double strassen =
      frob_diff(reconstruct_cp(strassen_certificate(), {4, 4, 4}), matmul_tensor());
  o.require(strassen_certificate().terms.size() == 7, "matmul schedule should have 7 terms");
  o.require(strassen <= 1e-12,
            fmt::format("matmul schedule residual {:.3e} above 1e-12", strassen));
  o.note(fmt::format("matmul: 7 terms, residual {:.3e}", strassen));
  return o;
}

// 3. The displayed circuit identities hold entrywise to 1e-12.
Outcome criterion_identities() {
  Outcome o;
  const ComplexMatrix h3 = kron(kron(i2(), i2()), elementary("H"));
  const auto check = [&o](const std::string& label, const ComplexMatrix& a,
                          const ComplexMatrix& b) {
    const double diff = max_abs(ComplexMatrix(a - b));
    o.require(diff <= 1e-12, fmt::format("{}: max diff {:.3e} above 1e-12", label, diff));
    o.note(fmt::format("{}: max diff {:.3e}", label, diff));
  };

  ComplexMatrix reflect = ComplexMatrix::Identity(8, 8);
  reflect(7, 7) = Complex(-1, 0);
  check("doubly controlled NOT vs conjugated reflector", gate("TOFFOLI").matrix,
        h3 * reflect * h3);

  check("U3_circ vs (cnot01 x H) TOFFOLI (I x I x H)", gate("U3_circ").matrix,
        kron(elementary("CNOT"), elementary("H")) * elementary("TOFFOLI") * h3);
  check("U3_circ vs its term expansion", gate("U3_circ").matrix,
        reconstruct_matrix(gate("U3_circ").certificate));

  check("U4 vs cnot01 cnot12", gate("U4").matrix,
        kron(elementary("CNOT"), i2()) * kron(i2(), elementary("CNOT")));

  check("U5_circ vs (cnot01 x I) FREDKIN", gate("U5_circ").matrix,
        kron(elementary("CNOT"), i2()) * elementary("FREDKIN"));
  check("U5_circ vs its term expansion", gate("U5_circ").matrix,
        reconstruct_matrix(gate("U5_circ").certificate));

  check("U6_circ vs cnot02 (H x I x I) U3_circ", gate("U6_circ").matrix,
        cnot02() * kron(kron(elementary("H"), i2()), i2()) * gate("U3_circ").matrix);
  check("U6_circ vs its term expansion", gate("U6_circ").matrix,
        reconstruct_matrix(gate("U6_circ").certificate));

  check("M3 vs cnot01 cnot12 cnot20", gate("M3").matrix,
        kron(elementary("CNOT"), i2()) * kron(i2(), elementary("CNOT")) * cnot20());

  // Interleaved two-local sandwich vs its eight-term expansion, 20 seeded
  // random local unitaries.
  std::mt19937_64 rng(0);
  const ComplexMatrix& x = elementary("X");
  const ComplexMatrix s0 = matrix_unit(0);
  const ComplexMatrix s3 = matrix_unit(3);
  double worst = 0.0;
  for (int sample = 0; sample < 20; ++sample) {
    const ComplexMatrix v1 = random_unitary2(rng);
    const ComplexMatrix w1 = random_unitary2(rng);
    const ComplexMatrix v2 = random_unitary2(rng);
    const ComplexMatrix x2 = random_unitary2(rng);
    const ComplexMatrix lhs = kron(elementary("CNOT"), i2()) * kron(kron(v1, w1), i2()) *
                              kron(i2(), elementary("CNOT")) * kron(kron(v2, i2()), x2) *
                              cnot02();
    const ComplexMatrix vs0 = v1 * v2 * s0;
    const ComplexMatrix vs3 = v1 * v2 * s3;
    const ComplexMatrix w0 = w1 * s0;
    const ComplexMatrix w3 = w1 * s3;
    ComplexMatrix rhs = kron(kron(s0 * vs0, w0), x2) + kron(kron(s3 * vs0, x * w0), x2) +
                        kron(kron(s0 * vs0, w3), x * x2) + kron(kron(s3 * vs0, x * w3), x * x2) +
                        kron(kron(s0 * vs3, w0), x2 * x) + kron(kron(s3 * vs3, x * w0), x2 * x) +
                        kron(kron(s0 * vs3, w3), x * x2 * x) +
                        kron(kron(s3 * vs3, x * w3), x * x2 * x);
    worst = std::max(worst, max_abs(ComplexMatrix(lhs - rhs)));
  }
  o.require(worst <= 1e-12,
            fmt::format("interleaved sandwich: worst of 20 samples {:.3e} above 1e-12", worst));
  o.note(fmt::format("interleaved sandwich expansion: worst of 20 samples {:.3e}", worst));
  return o;
}

// 4. Flattening and bipartite ranks match the pinned table exactly.
Outcome criterion_flattening_table() {
  Outcome o;
  const std::vector<std::pair<std::string, std::array<int, 3>>> table = {
      {"U3_pauli", {3, 3, 3}}, {"U4", {2, 4, 2}}, {"U5_thm1", {2, 4, 4}}};
  for (const auto& [name, want] : table) {
    const std::array<int, 3> got = mode_ranks(operator_tensor3(gate(name).matrix));
    o.require(got == want, fmt::format("{} flattening ranks ({},{},{}), want ({},{},{})", name,
                                       got[0], got[1], got[2], want[0], want[1], want[2]));
    o.note(fmt::format("{}: ({}, {}, {})", name, got[0], got[1], got[2]));
  }
  const std::array<int, 3> mm = mode_ranks(matmul_tensor());
  o.require(mm == std::array<int, 3>{4, 4, 4},
            fmt::format("matmul flattening ranks ({},{},{}), want (4,4,4)", mm[0], mm[1], mm[2]));
  o.note(fmt::format("matmul: ({}, {}, {})", mm[0], mm[1], mm[2]));

  const std::vector<int> q3{2, 2, 2};
  const int toff = bipartite_schmidt(gate("TOFFOLI").matrix, q3, parse_cut("A|BC", 3)).rank;
  const int fred_a = bipartite_schmidt(gate("FREDKIN").matrix, q3, parse_cut("A|BC", 3)).rank;
  const int fred_c = bipartite_schmidt(gate("FREDKIN").matrix, q3, parse_cut("C|AB", 3)).rank;
  o.require(toff == 2, fmt::format("TOFFOLI A|BC rank {}, want 2", toff));
  o.require(fred_a == 2, fmt::format("FREDKIN A|BC rank {}, want 2", fred_a));
  o.require(fred_c == 4, fmt::format("FREDKIN C|AB rank {}, want 4", fred_c));
  o.note(fmt::format("TOFFOLI A|BC: {}, FREDKIN A|BC: {}, FREDKIN C|AB: {}", toff, fred_a,
                     fred_c));
  return o;
}

// 5. ALS confirms every committed rank at seed 0 within 50 restarts.
Outcome criterion_als_confirmations() {
  Outcome o;
  const AlsConfig cfg = verification_config(0);
  const std::vector<std::pair<std::string, int>> fits = {
      {"TOFFOLI", 2},  {"U3_pauli", 3}, {"U4", 4},      {"finagler", 4}, {"FREDKIN", 4},
      {"U5_thm1", 5},  {"U5_circ", 5},  {"U6_thm1", 6}, {"U6_circ", 6},  {"T_lemma2", 6},
      {"U7", 7},       {"M3", 7}};
  for (const auto& [name, rank] : fits) {
    const AlsResult r = als_fit(operator_tensor3(gate(name).matrix), rank, cfg);
    o.require(r.converged && r.best_residual <= 1e-8 && r.restarts_used <= 50,
              fmt::format("{} rank {}: residual {:.3e}, converged {}", name, rank,
                          r.best_residual, r.converged));
    o.note(fmt::format("{} rank {}: residual {:.3e}, {} sweeps, {} restarts", name, rank,
                       r.best_residual, r.iterations_of_best, r.restarts_used));
  }
  const AlsResult mm = als_fit(matmul_tensor(), 7, cfg);
  o.require(mm.converged && mm.best_residual <= 1e-8 && mm.restarts_used <= 50,
            fmt::format("matmul rank 7: residual {:.3e}, converged {}", mm.best_residual,
                        mm.converged));
  o.note(fmt::format("matmul rank 7: residual {:.3e}, {} sweeps, {} restarts", mm.best_residual,
                     mm.iterations_of_best, mm.restarts_used));
  return o;
}

// 6. ALS finds no fit one below each committed rank; heuristic evidence only
//    (border-rank effects could in principle defeat this bar).
Outcome criterion_als_negatives() {
  Outcome o;
  const AlsConfig cfg = verification_config(0);
  const std::vector<std::pair<std::string, int>> negatives = {
      {"U3_pauli", 2}, {"U5_thm1", 4}, {"U6_thm1", 5}, {"U7", 6},
      {"M3", 6},       {"T_lemma2", 5}, {"U8", 6}};
  for (const auto& [name, rank] : negatives) {
    const AlsResult r = als_fit(operator_tensor3(gate(name).matrix), rank, cfg);
    o.require(!r.converged && r.best_residual > 1e-4,
              fmt::format("{} rank {}: best residual {:.3e}, expected above 1e-4 without "
                          "convergence",
                          name, rank, r.best_residual));
    o.note(fmt::format("{} rank {}: best residual {:.3e} over {} restarts (heuristic)", name,
                       rank, r.best_residual, r.restarts_used));
  }
  return o;
}

// 7. Witness sweep: every sampled two-CNOT sandwich lands on rank 2 or 4, the
//    closed-form classifier agrees with the certificate-backed measurement,
//    and the two reference witnesses split as predicted.
Outcome criterion_witness_sweep() {
  Outcome o;
  const M1Witness h = classify_m1(elementary("H"));
  const M1Witness id = classify_m1(ComplexMatrix::Identity(2, 2));
  o.require(h.predicted_rank == 2, "witness H should predict rank 2");
  o.require(id.predicted_rank == 4, "witness I should predict rank 4");

  const SweepSummary s = random_m1_sweep(100, 0, verification_config(0));
  o.require(s.samples == 100, "sweep should draw 100 samples");
  o.require(s.outside_set == 0,
            fmt::format("{} samples landed outside ranks {{2, 4}}", s.outside_set));
  o.require(s.agreements == 100,
            fmt::format("classifier agreed on {} of 100 samples", s.agreements));
  o.require(s.rank_two + s.rank_four == 100, "rank tallies should cover every sample");
  o.require(s.max_certificate_residual <= 1e-12,
            fmt::format("worst certificate residual {:.3e} above 1e-12",
                        s.max_certificate_residual));
  o.note(fmt::format("100 samples: {} rank two, {} rank four, worst certificate residual {:.3e}",
                     s.rank_two, s.rank_four, s.max_certificate_residual));
  return o;
}

// 8. The relabeling search maps U7 onto the multiplication tensor.
Outcome criterion_isomorphism() {
  Outcome o;
  const auto found = permutation_isomorphism(operator_tensor3(gate("U7").matrix),
                                             matmul_tensor());
  o.require(found.has_value(), "no index relabeling of U7 matches the multiplication tensor");
  if (found) {
    o.note(fmt::format("first triple: ({}) ({}) ({})", fmt::join((*found)[0], ","),
                       fmt::join((*found)[1], ","), fmt::join((*found)[2], ",")));
  }
  return o;
}

// 9. The U8 report stays honestly open: certified upper 8, no fit at 6, and
//    the rank-7 attempt recorded either way.
Outcome criterion_u8_report() {
  Outcome o;
  const GateEntry& g = gate("U8");
  const RankReport rep = rank_search(operator_tensor3(g.matrix), &g.certificate,
                                     verification_config(0), g.claimed_rank, g.name);
  o.require(rep.certified_upper == 8,
            fmt::format("certified upper {}, want 8", rep.certified_upper));
  bool failed_at_6 = false;
  for (const AlsFailure& f : rep.als_failures) {
    if (f.rank == 6 && f.best_residual > 1e-4) failed_at_6 = true;
  }
  o.require(failed_at_6, "expected a recorded ALS failure at rank 6 above 1e-4");
  o.require(rep.verdict == Verdict::kOpen,
            fmt::format("verdict {}, want OPEN", verdict_name(rep.verdict)));
  if (rep.als_upper == 7) {
    o.note(fmt::format("rank-7 attempt: converged, residual {:.3e} after {} sweeps "
                       "(evidence only; border effects possible)",
                       rep.als_upper_residual, rep.als_upper_iterations));
  } else {
    double best7 = -1.0;
    for (const AlsFailure& f : rep.als_failures) {
      if (f.rank == 7) best7 = f.best_residual;
    }
    o.note(fmt::format("rank-7 attempt: no convergence, best residual {:.3e}", best7));
  }
  o.note(fmt::format("verdict: {} with claim {{7, 8}}", verdict_name(rep.verdict)));
  return o;
}

// 10. The full claim registry passes with no FAIL, and the JSON report is
//     byte-identical across repeated runs at one seed.
Outcome criterion_verify_all() {
  Outcome o;
  std::ostringstream out1, err1, out2, err2;
  const int code1 = run_cli({"verify", "all", "--json"}, out1, err1);
  const int code2 = run_cli({"verify", "all", "--json"}, out2, err2);
  o.require(code1 == 0, fmt::format("first run exited {}", code1));
  o.require(code2 == 0, fmt::format("second run exited {}", code2));
  o.require(out1.str() == out2.str(), "repeated runs should emit byte-identical JSON");

  const auto j = nlohmann::ordered_json::parse(out1.str());
  int n_pass = 0, n_open = 0, n_fail = 0;
  for (const auto& item : j["verdicts"].items()) {
    const std::string v = item.value().get<std::string>();
    if (v == "PASS") ++n_pass;
    if (v == "OPEN-EVIDENCE") ++n_open;
    if (v == "FAIL") {
      ++n_fail;
      o.require(false, fmt::format("claim {} reported FAIL", item.key()));
    }
  }
  o.require(n_pass + n_open + n_fail == 17, "expected verdicts for all 17 claims");
  o.note(fmt::format("17 claims: {} PASS, {} OPEN-EVIDENCE, {} FAIL; outputs byte-identical",
                     n_pass, n_open, n_fail));

  // Cross-check against the expected split; drift is loud but not fatal here,
  // the byte-identity and no-FAIL conditions above are the gate.
  const std::vector<std::string> expect_pass = {"C1", "C2",  "C3",  "C4", "C5",
                                                "C12", "C15", "C16", "C17"};
  for (const auto& item : j["verdicts"].items()) {
    const bool want_pass =
        std::find(expect_pass.begin(), expect_pass.end(), item.key()) != expect_pass.end();
    const std::string want = want_pass ? "PASS" : "OPEN-EVIDENCE";
    if (item.value().get<std::string>() != want) {
      o.note(fmt::format("WARNING: {} is {} (expected {})", item.key(),
                         item.value().get<std::string>(), want));
    }
  }
  return o;
}

struct Criterion {
  int id;
  std::string label;
  double time_limit;  // seconds; 0 = unbounded
  std::function<Outcome()> fn;
};

}  // namespace
}  // namespace srank

int main() {
  using namespace srank;
  const std::vector<Criterion> criteria = {
      {1, "unitarity of every claimed-unitary catalog gate within 1e-12", 1.0,
       criterion_unitarity},
      {2, "bundled certificates reconstruct their tensors within 1e-12", 1.0,
       criterion_certificates},
      {3, "displayed circuit identities hold within 1e-12", 1.0, criterion_identities},
      {4, "flattening and bipartite rank table matches exactly", 0.0,
       criterion_flattening_table},
      {5, "ALS confirms every committed rank at seed 0", 120.0, criterion_als_confirmations},
      {6, "ALS finds no fit one rank below each commitment (heuristic)", 0.0,
       criterion_als_negatives},
      {7, "witness sweep: 100 sampled sandwiches land on ranks {2, 4}", 120.0,
       criterion_witness_sweep},
      {8, "relabeling search maps U7 onto the multiplication tensor", 5.0,
       criterion_isomorphism},
      {9, "U8 report: certified upper 8, no fit at 6, verdict OPEN", 0.0, criterion_u8_report},
      {10, "verify all: no FAIL, byte-identical JSON across runs", 300.0,
       criterion_verify_all},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.fn();
    const double dt = seconds_since(t0);
    if (c.time_limit > 0.0 && dt > c.time_limit) {
      o.pass = false;
      o.notes.push_back(
          fmt::format("FAILED: runtime {:.2f} s exceeds the {:.0f} s budget", dt, c.time_limit));
    }
    fmt::print("[{}] criterion {:>2}: {} ({:.2f} s)\n", o.pass ? "PASS" : "FAIL", c.id, c.label,
               dt);
    for (const std::string& line : o.notes) fmt::print("          {}\n", line);
    if (!o.pass) ++failures;
  }
  fmt::print("acceptance: {} of {} criteria pass\n", criteria.size() - failures,
             criteria.size());
  return failures == 0 ? 0 : 1;
}
