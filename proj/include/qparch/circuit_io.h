// Copyright 2026 The qparch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPARCH_CIRCUIT_IO_H_
#define QPARCH_CIRCUIT_IO_H_

#include <istream>
#include <vector>

#include "json.hpp"
#include "qparch/pauli_frame.h"

namespace qparch {

/// A frame-tracking circuit read from a JSON-lines file:
///
///   {"op":"pauli","p":"X","q":0}
///   {"op":"clifford","g":"CNOT","q":[0,1]}
///   {"op":"measure","basis":"Z","q":0,"raw":1}
///
/// Blank lines are skipped. The raw outcomes of measure lines are collected
/// in order into raw_outcomes.
struct CircuitFile {
  std::vector<Instruction> instructions;
  std::vector<int> raw_outcomes;
  size_t num_qubits = 0;  // 1 + largest qubit index referenced
};

/// Throws ParseError carrying the offending line number.
CircuitFile parse_circuit(std::istream &in);

/// {"outcomes": [...], "frame": "IXZ..."}
nlohmann::json circuit_result_to_json(const CircuitResult &result);

}  // namespace qparch

#endif  // QPARCH_CIRCUIT_IO_H_
