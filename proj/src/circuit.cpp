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

#include "srank/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "srank/gate_catalog.hpp"

namespace srank {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// mnemonic -> elementary name, e.g. "cnot" -> "CNOT".
const std::map<std::string, std::string>& mnemonics() {
  static const std::map<std::string, std::string> m = [] {
    std::map<std::string, std::string> out;
    for (const std::string& name : elementary_names()) out.emplace(to_lower(name), name);
    return out;
  }();
  return m;
}

int qubit_count(const ComplexMatrix& m) {
  int n = 0;
  Eigen::Index dim = m.rows();
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

// Resolve a step to (matrix, arity); step names are validated at parse time,
// but programmatically built circuits go through the same checks here.
const ComplexMatrix& step_matrix(const Step& step) {
  auto it = mnemonics().find(step.name);
  if (it != mnemonics().end()) return elementary(it->second);
  return gate(step.name).matrix;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw CircuitParseError(fmt::format("line {}: {}", line_no, what));
}

int parse_int(const std::string& token, int line_no) {
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    fail(line_no, fmt::format("expected an integer, got '{}'", token));
  }
  if (pos != token.size()) fail(line_no, fmt::format("expected an integer, got '{}'", token));
  return value;
}

void check_positions(const std::vector<int>& qubits, int arity, int n_qubits, int line_no) {
  if (static_cast<int>(qubits.size()) != arity)
    fail(line_no, fmt::format("gate expects {} qubit(s), got {}", arity, qubits.size()));
  std::set<int> seen;
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits)
      fail(line_no, fmt::format("qubit {} out of range for {} qubit(s)", q, n_qubits));
    if (!seen.insert(q).second) fail(line_no, fmt::format("duplicate qubit {}", q));
  }
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  Circuit c;
  bool header_allowed = true;
  bool n_qubits_set = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "qubits") {
      if (!header_allowed || n_qubits_set) fail(line_no, "'qubits' must be the first statement");
      if (tok.size() != 2) fail(line_no, "usage: qubits N");
      int n = parse_int(tok[1], line_no);
      if (n < 1) fail(line_no, fmt::format("qubit count must be at least 1, got {}", n));
      c.n_qubits = n;
      n_qubits_set = true;
      header_allowed = false;
      continue;
    }
    header_allowed = false;

    Step step;
    size_t first_qubit_token = 1;
    if (tok[0] == "gate") {
      if (tok.size() < 2) fail(line_no, "usage: gate <name> <qubits...>");
      if (!is_gate(tok[1])) fail(line_no, fmt::format("unknown gate '{}'", tok[1]));
      step.name = tok[1];
      first_qubit_token = 2;
    } else {
      if (mnemonics().find(tok[0]) == mnemonics().end())
        fail(line_no, fmt::format("unknown gate '{}'", tok[0]));
      step.name = tok[0];
    }
    for (size_t idx = first_qubit_token; idx < tok.size(); ++idx)
      step.qubits.push_back(parse_int(tok[idx], line_no));
    check_positions(step.qubits, qubit_count(step_matrix(step)), c.n_qubits, line_no);
    c.steps.push_back(std::move(step));
  }
  return c;
}

std::string format_circuit(const Circuit& c) {
  std::string out = fmt::format("qubits {}\n", c.n_qubits);
  for (const Step& step : c.steps) {
    bool is_mnemonic = mnemonics().count(step.name) > 0;
    out += is_mnemonic ? step.name : fmt::format("gate {}", step.name);
    for (int q : step.qubits) out += fmt::format(" {}", q);
    out += '\n';
  }
  return out;
}

ComplexMatrix embed(const ComplexMatrix& g, const std::vector<int>& positions, int n_qubits) {
  int k = static_cast<int>(positions.size());
  if (n_qubits < 1 || n_qubits > 20)
    throw std::invalid_argument(fmt::format("embed: unsupported qubit count {}", n_qubits));
  if (g.rows() != g.cols() || g.rows() != (Eigen::Index{1} << k))
    throw std::invalid_argument(
        fmt::format("embed: gate of shape {}x{} does not act on {} qubit(s)", g.rows(), g.cols(), k));
  std::set<int> seen;
  for (int q : positions) {
    if (q < 0 || q >= n_qubits)
      throw std::invalid_argument(fmt::format("embed: qubit {} out of range", q));
    if (!seen.insert(q).second)
      throw std::invalid_argument(fmt::format("embed: duplicate qubit {}", q));
  }

  // Qubit q occupies bit (n-1-q); gate system t reads the bit at positions[t].
  int dim = 1 << n_qubits;
  int gdim = 1 << k;
  int rest_mask = dim - 1;
  for (int q : positions) rest_mask &= ~(1 << (n_qubits - 1 - q));

  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (int rest = 0; rest < dim; ++rest) {
    if ((rest & rest_mask) != rest) continue;
    for (int gr = 0; gr < gdim; ++gr) {
      int row = rest;
      for (int t = 0; t < k; ++t)
        if (gr & (1 << (k - 1 - t))) row |= 1 << (n_qubits - 1 - positions[t]);
      for (int gc = 0; gc < gdim; ++gc) {
        if (g(gr, gc) == Complex{0.0, 0.0}) continue;
        int col = rest;
        for (int t = 0; t < k; ++t)
          if (gc & (1 << (k - 1 - t))) col |= 1 << (n_qubits - 1 - positions[t]);
        out(row, col) = g(gr, gc);
      }
    }
  }
  return out;
}

ComplexMatrix evaluate(const Circuit& c) {
  int dim = 1 << c.n_qubits;
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const Step& step : c.steps) u = embed(step_matrix(step), step.qubits, c.n_qubits) * u;
  return u;
}

}  // namespace srank
