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
 * @file circuit.hpp
 * @brief A small text format for gate lists and its dense evaluator.
 *
 * Grammar, one statement per line, '#' starts a comment:
 *   qubits N            optional header (default 3); must precede all steps
 *   <mnemonic> <q...>   elementary gate, lowercase name (x, h, cnot, toffoli, ...)
 *   gate <Name> <q...>  any catalog gate placed by name
 *
 * Qubit 0 is the leftmost tensor factor (most significant bit). Multi-qubit
 * gates list the control first. Steps are written in temporal order: the first
 * line acts first, so the circuit's matrix is M_k ··· M_1.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "srank/tensor_core.hpp"

namespace srank {

/** One placed gate: canonical name plus the qubit positions it acts on. */
struct Step {
  std::string name;          // lowercase mnemonic, or catalog name for `gate` steps
  std::vector<int> qubits;   // distinct, in [0, n_qubits)
  bool operator==(const Step&) const = default;
};

struct Circuit {
  int n_qubits = 3;
  std::vector<Step> steps;
  bool operator==(const Circuit&) const = default;
};

/** Parse failure with a 1-based line number in the message. */
struct CircuitParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Circuit parse_circuit(const std::string& text);

/** Canonical text: `qubits N` header then one line per step; parse ∘ format = id. */
std::string format_circuit(const Circuit& c);

/**
 * Lift a gate on k qubits to n qubits, acting on the listed positions in the
 * listed order and as identity elsewhere. positions.size() must match the
 * gate's qubit count; reordered positions relabel the gate's systems.
 */
ComplexMatrix embed(const ComplexMatrix& g, const std::vector<int>& positions, int n_qubits);

/** Dense matrix of the whole circuit: the product M_k ··· M_1 of embedded steps. */
ComplexMatrix evaluate(const Circuit& c);

}  // namespace srank
