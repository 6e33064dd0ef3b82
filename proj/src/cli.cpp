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

#include "srank/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "srank/circuit.hpp"
#include "srank/claims.hpp"
#include "srank/cp_als.hpp"
#include "srank/gate_catalog.hpp"
#include "srank/schmidt.hpp"

namespace srank {
namespace {

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("file not found: {}", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --- text formatting -------------------------------------------------------

std::string complex_text(const Complex& z) {
  return fmt::format("{:.6g}{:+.6g}i", z.real(), z.imag());
}

void print_matrix(std::ostream& out, const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << " ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out << fmt::format(" {:>21}", complex_text(m(i, j)));
    }
    out << "\n";
  }
}

std::string row_vector_text(const ComplexMatrix& v) {
  std::vector<std::string> parts;
  for (Eigen::Index i = 0; i < v.size(); ++i) parts.push_back(complex_text(v(i)));
  return fmt::format("[{}]", fmt::join(parts, ", "));
}

std::string claimed_text(const GateEntry& g) {
  if (g.claimed_rank.empty()) return "none";
  const std::string body = fmt::format("{}", fmt::join(g.claimed_rank, " or "));
  return g.claim_is_upper_bound ? "<= " + body : body;
}

std::string cut_to_text(const Cut& cut) {
  std::string s;
  for (int i : cut.left) s.push_back(static_cast<char>('A' + i));
  s.push_back('|');
  for (int i : cut.right) s.push_back(static_cast<char>('A' + i));
  return s;
}

void print_rank_report(std::ostream& out, const RankReport& rep) {
  out << fmt::format("target:          {}\n", rep.target);
  out << fmt::format("mode ranks:      ({}, {}, {})\n", rep.mode_ranks[0], rep.mode_ranks[1],
                     rep.mode_ranks[2]);
  out << fmt::format("proved lower:    {}\n", rep.proved_lower);
  if (rep.certified_upper >= 0) {
    out << fmt::format("certified upper: {} (residual {:.3e})\n", rep.certified_upper,
                       rep.certificate_residual);
  } else if (rep.certificate_residual >= 0) {
    out << fmt::format("certified upper: none (certificate residual {:.3e} above tolerance)\n",
                       rep.certificate_residual);
  } else {
    out << "certified upper: none (no certificate given)\n";
  }
  if (rep.als_upper >= 0) {
    out << fmt::format("ALS upper:       {} (residual {:.3e}, {} iterations)\n", rep.als_upper,
                       rep.als_upper_residual, rep.als_upper_iterations);
  } else {
    out << "ALS upper:       none\n";
  }
  for (const AlsFailure& f : rep.als_failures) {
    out << fmt::format("  no rank-{} fit: best residual {:.3e} over {} restarts\n", f.rank,
                       f.best_residual, f.restarts);
  }
  if (rep.claimed.empty()) {
    out << "claimed rank:    none\n";
  } else {
    out << fmt::format("claimed rank:    {}\n", fmt::join(rep.claimed, " or "));
  }
  out << fmt::format("verdict:         {}\n", verdict_name(rep.verdict));
}

// --- JSON building ---------------------------------------------------------

ojson json_matrix(const ComplexMatrix& m) {
  ojson rows = ojson::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(ojson::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson json_rank_report(const RankReport& rep) {
  ojson j;
  j["target"] = rep.target;
  j["mode_ranks"] = rep.mode_ranks;
  j["proved_lower"] = rep.proved_lower;
  j["certified_upper"] = rep.certified_upper >= 0 ? ojson(rep.certified_upper) : ojson(nullptr);
  j["certificate_residual"] =
      rep.certificate_residual >= 0 ? ojson(rep.certificate_residual) : ojson(nullptr);
  j["als_upper"] = rep.als_upper >= 0 ? ojson(rep.als_upper) : ojson(nullptr);
  j["als_upper_residual"] =
      rep.als_upper >= 0 ? ojson(rep.als_upper_residual) : ojson(nullptr);
  j["als_upper_iterations"] =
      rep.als_upper >= 0 ? ojson(rep.als_upper_iterations) : ojson(nullptr);
  ojson failures = ojson::array();
  for (const AlsFailure& f : rep.als_failures) {
    ojson jf;
    jf["rank"] = f.rank;
    jf["best_residual"] = f.best_residual;
    jf["restarts"] = f.restarts;
    failures.push_back(std::move(jf));
  }
  j["als_failures"] = std::move(failures);
  j["claimed"] = rep.claimed;
  j["verdict"] = std::string(verdict_name(rep.verdict));
  return j;
}

ojson json_claim_report(const ClaimReport& r) {
  ojson j;
  j["id"] = r.id;
  j["statement"] = r.statement;
  j["overall"] = std::string(check_status_name(r.overall));
  ojson checks = ojson::array();
  for (const ClaimCheck& c : r.checks) {
    ojson jc;
    jc["description"] = c.description;
    jc["status"] = std::string(check_status_name(c.status));
    ojson metrics;
    for (const auto& [k, v] : c.metrics) metrics[k] = v;
    jc["metrics"] = std::move(metrics);
    jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  return j;
}

void emit_json(std::ostream& out, const std::string& command, const std::string& target,
               ojson results, ojson verdicts, uint64_t seed) {
  ojson j;
  j["command"] = command;
  j["target"] = target;
  j["results"] = std::move(results);
  j["verdicts"] = std::move(verdicts);
  j["seed"] = seed;
  j["tool_version"] = std::string(kToolVersion);
  out << j.dump(2) << "\n";
}

// --- commands ---------------------------------------------------------------

int cmd_gate(const std::string& name, bool json, std::ostream& out) {
  const GateEntry& g = gate(name);
  const double deviation = unitarity_deviation(g.matrix);
  const bool unitary = deviation <= 1e-12;
  if (json) {
    ojson res;
    res["name"] = g.name;
    res["system_dims"] = g.system_dims;
    res["summary"] = g.summary;
    res["claimed_rank"] = g.claimed_rank;
    res["claim_is_upper_bound"] = g.claim_is_upper_bound;
    res["claimed_unitary"] = g.claimed_unitary;
    res["unitarity_deviation"] = deviation;
    res["certificate_terms"] = g.certificate.terms.size();
    res["matrix"] = json_matrix(g.matrix);
    ojson verdicts;
    verdicts["unitary"] = unitary;
    emit_json(out, "gate", g.name, std::move(res), std::move(verdicts), 0);
  } else {
    out << fmt::format("gate:              {}\n", g.name);
    out << fmt::format("systems:           {}\n", fmt::join(g.system_dims, " x "));
    out << fmt::format("summary:           {}\n", g.summary);
    out << fmt::format("unitary:           {} (deviation {:.3e})\n", unitary ? "yes" : "no",
                       deviation);
    out << fmt::format("claimed rank:      {}\n", claimed_text(g));
    out << fmt::format("certificate terms: {}\n", g.certificate.terms.size());
    out << "matrix:\n";
    print_matrix(out, g.matrix);
  }
  return 0;
}

struct RankTarget {
  std::string label;
  ComplexMatrix matrix;
  std::vector<int> dims;
  const Decomposition* certificate = nullptr;
  std::vector<int> claimed;
};

RankTarget resolve_rank_target(const std::string& name, const std::string& circuit_path) {
  if (name.empty() == circuit_path.empty()) {
    throw std::invalid_argument("rank needs exactly one of <name> or --circuit <file>");
  }
  RankTarget t;
  if (!name.empty()) {
    const GateEntry& g = gate(name);
    t.label = g.name;
    t.matrix = g.matrix;
    t.dims = g.system_dims;
    if (!g.certificate.terms.empty()) t.certificate = &g.certificate;
    t.claimed = g.claimed_rank;
  } else {
    const Circuit c = parse_circuit(read_file(circuit_path));
    t.label = circuit_path;
    t.matrix = evaluate(c);
    t.dims.assign(c.n_qubits, 2);
  }
  return t;
}

int cmd_rank(const std::string& name, const std::string& circuit_path, const std::string& cut_text,
             uint64_t seed, bool json, std::ostream& out) {
  const RankTarget t = resolve_rank_target(name, circuit_path);
  if (!cut_text.empty()) {
    const Cut cut = parse_cut(cut_text, static_cast<int>(t.dims.size()));
    const BipartiteSchmidt bs = bipartite_schmidt(t.matrix, t.dims, cut);
    if (json) {
      ojson res;
      res["cut"] = cut_to_text(cut);
      res["schmidt_rank"] = bs.rank;
      res["weights"] = bs.weights;
      ojson verdicts;
      verdicts["schmidt_rank"] = bs.rank;
      emit_json(out, "rank", t.label, std::move(res), std::move(verdicts), seed);
    } else {
      out << fmt::format("target:       {}\n", t.label);
      out << fmt::format("cut:          {}\n", cut_to_text(cut));
      out << fmt::format("schmidt rank: {}\n", bs.rank);
      std::vector<std::string> ws;
      for (double w : bs.weights) ws.push_back(fmt::format("{:.6g}", w));
      out << fmt::format("weights:      {}\n", fmt::join(ws, ", "));
    }
    return 0;
  }
  if (t.dims != std::vector<int>{2, 2, 2}) {
    throw std::invalid_argument(
        "a tripartite rank report needs a three-qubit operator; pick a bipartite --cut instead");
  }
  const RankReport rep = rank_search(operator_tensor3(t.matrix), t.certificate,
                                     verification_config(seed), t.claimed, t.label);
  if (json) {
    ojson verdicts;
    verdicts["verdict"] = std::string(verdict_name(rep.verdict));
    emit_json(out, "rank", t.label, json_rank_report(rep), std::move(verdicts), seed);
  } else {
    print_rank_report(out, rep);
  }
  return rep.verdict == Verdict::kInconsistent ? 1 : 0;
}

int cmd_decompose(const std::string& name, int rank, uint64_t seed, bool json, std::ostream& out) {
  const GateEntry& g = gate(name);
  const AlsResult res = als_fit(operator_tensor3(g.matrix), rank, verification_config(seed));
  if (json) {
    ojson r;
    r["rank_tried"] = res.rank_tried;
    r["best_residual"] = res.best_residual;
    r["converged"] = res.converged;
    r["restarts_used"] = res.restarts_used;
    r["iterations_of_best"] = res.iterations_of_best;
    ojson terms = ojson::array();
    for (const Term& term : res.factors.terms) {
      ojson jt;
      jt["weight"] = ojson::array({term.weight.real(), term.weight.imag()});
      ojson factors = ojson::array();
      for (const ComplexMatrix& f : term.factors) factors.push_back(json_matrix(f));
      jt["factors"] = std::move(factors);
      terms.push_back(std::move(jt));
    }
    r["factors"] = std::move(terms);
    ojson verdicts;
    verdicts["converged"] = res.converged;
    emit_json(out, "decompose", g.name, std::move(r), std::move(verdicts), seed);
  } else {
    out << fmt::format("target:             {}\n", g.name);
    out << fmt::format("rank tried:         {}\n", res.rank_tried);
    out << fmt::format("best residual:      {:.6e}\n", res.best_residual);
    out << fmt::format("converged:          {}\n", res.converged ? "yes" : "no");
    out << fmt::format("restarts used:      {}\n", res.restarts_used);
    out << fmt::format("iterations of best: {}\n", res.iterations_of_best);
    int idx = 0;
    for (const Term& term : res.factors.terms) {
      out << fmt::format("term {:>2} weight {}:\n", ++idx, complex_text(term.weight));
      const char* sides[3] = {"A", "B", "C"};
      for (std::size_t s = 0; s < term.factors.size(); ++s) {
        out << fmt::format("  {} = {}\n", sides[s % 3], row_vector_text(term.factors[s]));
      }
    }
  }
  return 0;
}

int cmd_verify(const std::string& target, uint64_t seed, bool json, std::ostream& out) {
  const AlsConfig cfg = verification_config(seed);
  std::vector<ClaimReport> reports;
  if (target == "all") {
    reports = verify_all(cfg);
  } else {
    reports.push_back(verify_claim(target, cfg));
  }
  bool any_fail = false;
  for (const ClaimReport& r : reports) any_fail = any_fail || r.overall == CheckStatus::kFail;

  if (json) {
    ojson res = ojson::array();
    ojson verdicts;
    for (const ClaimReport& r : reports) {
      res.push_back(json_claim_report(r));
      verdicts[r.id] = std::string(check_status_name(r.overall));
    }
    emit_json(out, "verify", target, std::move(res), std::move(verdicts), seed);
  } else {
    int n_pass = 0, n_fail = 0, n_open = 0;
    for (const ClaimReport& r : reports) {
      switch (r.overall) {
        case CheckStatus::kPass:
          ++n_pass;
          break;
        case CheckStatus::kFail:
          ++n_fail;
          break;
        case CheckStatus::kOpenEvidence:
          ++n_open;
          break;
      }
      out << fmt::format("{:<4} [{}] {}\n", r.id, check_status_name(r.overall), r.statement);
      for (const ClaimCheck& c : r.checks) {
        std::vector<std::string> ms;
        for (const auto& [k, v] : c.metrics) ms.push_back(fmt::format("{}={:.6g}", k, v));
        out << fmt::format("  [{}] {}{}{}\n", check_status_name(c.status), c.description,
                           ms.empty() ? "" : fmt::format(" ({})", fmt::join(ms, ", ")),
                           c.detail.empty() ? "" : fmt::format(" -- {}", c.detail));
      }
    }
    out << fmt::format("summary: {} claims, {} PASS, {} FAIL, {} OPEN-EVIDENCE\n", reports.size(),
                       n_pass, n_fail, n_open);
  }
  return any_fail ? 1 : 0;
}

int cmd_eval(const std::string& path, uint64_t seed, bool json, std::ostream& out) {
  const Circuit c = parse_circuit(read_file(path));
  const ComplexMatrix u = evaluate(c);
  const bool tripartite = c.n_qubits == 3;
  RankReport rep;
  if (tripartite) {
    rep = rank_search(operator_tensor3(u), nullptr, verification_config(seed), {}, path);
  }
  if (json) {
    ojson res;
    ojson jc;
    jc["n_qubits"] = c.n_qubits;
    ojson steps = ojson::array();
    for (const Step& s : c.steps) {
      ojson js;
      js["name"] = s.name;
      js["qubits"] = s.qubits;
      steps.push_back(std::move(js));
    }
    jc["steps"] = std::move(steps);
    res["circuit"] = std::move(jc);
    res["matrix"] = json_matrix(u);
    res["rank_report"] = tripartite ? json_rank_report(rep) : ojson(nullptr);
    ojson verdicts;
    verdicts["verdict"] =
        tripartite ? ojson(std::string(verdict_name(rep.verdict))) : ojson(nullptr);
    emit_json(out, "eval", path, std::move(res), std::move(verdicts), seed);
  } else {
    out << fmt::format("circuit: {}\n", path);
    out << format_circuit(c);
    out << "unitary:\n";
    print_matrix(out, u);
    if (tripartite) {
      print_rank_report(out, rep);
    } else {
      out << fmt::format(
          "rank report: skipped (needs a three-qubit circuit, this one has {} qubits)\n",
          c.n_qubits);
    }
  }
  return tripartite && rep.verdict == Verdict::kInconsistent ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schmidt-rank toolkit for three-qubit gates"};
  app.require_subcommand(1);

  std::string gate_name;
  bool gate_json = false;
  CLI::App* gate_cmd = app.add_subcommand("gate", "print a catalog gate and its claims");
  gate_cmd->add_option("name", gate_name, "catalog gate name")->required();
  gate_cmd->add_flag("--json", gate_json, "emit JSON");

  std::string rank_name, rank_circuit, rank_cut;
  uint64_t rank_seed = 0;
  bool rank_json = false;
  CLI::App* rank_cmd =
      app.add_subcommand("rank", "rank report for a gate or an evaluated circuit");
  rank_cmd->add_option("name", rank_name, "catalog gate name");
  rank_cmd->add_option("--circuit", rank_circuit, "circuit file to evaluate");
  rank_cmd->add_option("--cut", rank_cut, "bipartite cut such as A|BC; omit for tripartite");
  rank_cmd->add_option("--seed", rank_seed, "random seed (default 0)");
  rank_cmd->add_flag("--json", rank_json, "emit JSON");

  std::string dec_name;
  int dec_rank = 0;
  uint64_t dec_seed = 0;
  bool dec_json = false;
  CLI::App* dec_cmd = app.add_subcommand("decompose", "fit an explicit rank-r decomposition");
  dec_cmd->add_option("name", dec_name, "catalog gate name")->required();
  dec_cmd->add_option("--rank", dec_rank, "number of product terms to fit")->required();
  dec_cmd->add_option("--seed", dec_seed, "random seed (default 0)");
  dec_cmd->add_flag("--json", dec_json, "emit JSON");

  std::string verify_target = "all";
  uint64_t verify_seed = 0;
  bool verify_json = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check registered claims (C1..C17)");
  verify_cmd->add_option("claim", verify_target, "claim id, or 'all'");
  verify_cmd->add_option("--seed", verify_seed, "random seed (default 0)");
  verify_cmd->add_flag("--json", verify_json, "emit JSON");

  std::string eval_path;
  uint64_t eval_seed = 0;
  bool eval_json = false;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a circuit file and report its rank");
  eval_cmd->add_option("file", eval_path, "circuit file")->required();
  eval_cmd->add_option("--seed", eval_seed, "random seed (default 0)");
  eval_cmd->add_flag("--json", eval_json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gate_cmd->parsed()) return cmd_gate(gate_name, gate_json, out);
    if (rank_cmd->parsed()) {
      return cmd_rank(rank_name, rank_circuit, rank_cut, rank_seed, rank_json, out);
    }
    if (dec_cmd->parsed()) return cmd_decompose(dec_name, dec_rank, dec_seed, dec_json, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_target, verify_seed, verify_json, out);
    if (eval_cmd->parsed()) return cmd_eval(eval_path, eval_seed, eval_json, out);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "no command given\n";
  return 2;
}

}  // namespace srank
