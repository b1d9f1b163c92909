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

#include "qparch/circuit_io.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "qparch/errors.h"

namespace qparch {

namespace {

using nlohmann::json;

uint32_t qubit_index(const json &v, size_t line) {
  if (!v.is_number_integer() || v.get<int64_t>() < 0 || v.get<int64_t>() > UINT32_MAX) {
    throw ParseError("qubit index must be a non-negative integer", line);
  }
  return v.get<uint32_t>();
}

Pauli letter_field(const json &obj, const char *key, size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string() || it->get<std::string>().size() != 1) {
    throw ParseError(std::string("'") + key + "' must be one of \"I\", \"X\", \"Y\", \"Z\"", line);
  }
  auto p = pauli_from_char(it->get<std::string>()[0]);
  if (!p) throw ParseError(std::string("'") + key + "' must be one of \"I\", \"X\", \"Y\", \"Z\"", line);
  return *p;
}

const json &required(const json &obj, const char *key, size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing '") + key + "'", line);
  return *it;
}

}  // namespace

CircuitFile parse_circuit(std::istream &in) {
  CircuitFile file;
  std::string text;
  size_t line = 0;
  uint32_t max_q = 0;
  bool any_q = false;
  auto note = [&](uint32_t q) {
    max_q = any_q ? std::max(max_q, q) : q;
    any_q = true;
  };

  while (std::getline(in, text)) {
    ++line;
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::parse_error &) {
      throw ParseError("not a JSON object", line);
    }
    if (!obj.is_object()) throw ParseError("not a JSON object", line);
    const json &op = required(obj, "op", line);
    if (!op.is_string()) throw ParseError("'op' must be a string", line);
    std::string kind = op.get<std::string>();

    if (kind == "pauli") {
      PauliInstr instr{letter_field(obj, "p", line), qubit_index(required(obj, "q", line), line)};
      note(instr.q);
      file.instructions.emplace_back(instr);
    } else if (kind == "clifford") {
      const json &g = required(obj, "g", line);
      auto gk = g.is_string() ? gate_from_name(g.get<std::string>()) : std::nullopt;
      if (!gk || *gk == GateKind::kMX || *gk == GateKind::kMZ) {
        throw ParseError("unknown Clifford gate " + g.dump(), line);
      }
      const json &q = required(obj, "q", line);
      std::vector<uint32_t> targets;
      if (q.is_array()) {
        for (const auto &v : q) targets.push_back(qubit_index(v, line));
      } else {
        targets.push_back(qubit_index(q, line));
      }
      if (static_cast<int>(targets.size()) != gate_arity(*gk)) {
        throw ParseError(std::string(gate_name(*gk)) + " expects " + std::to_string(gate_arity(*gk)) + " qubit(s)",
                         line);
      }
      if (*gk == GateKind::kCnot && targets[0] == targets[1]) {
        throw ParseError("CNOT control and target must differ", line);
      }
      CliffordGate gate{*gk, targets[0], targets.size() > 1 ? targets[1] : 0};
      for (uint32_t t : targets) note(t);
      file.instructions.emplace_back(CliffordInstr{gate});
    } else if (kind == "measure") {
      Pauli basis = letter_field(obj, "basis", line);
      if (basis == Pauli::I) throw ParseError("measurement basis must be X, Y or Z", line);
      uint32_t q = qubit_index(required(obj, "q", line), line);
      const json &raw = required(obj, "raw", line);
      if (!raw.is_number_integer() || (raw.get<int>() != 1 && raw.get<int>() != -1)) {
        throw ParseError("'raw' must be 1 or -1", line);
      }
      note(q);
      file.instructions.emplace_back(MeasureInstr{basis, q});
      file.raw_outcomes.push_back(raw.get<int>());
    } else {
      throw ParseError("unknown op '" + kind + "'", line);
    }
  }
  file.num_qubits = any_q ? static_cast<size_t>(max_q) + 1 : 0;
  return file;
}

json circuit_result_to_json(const CircuitResult &result) {
  json out = json::object();
  out["outcomes"] = result.outcomes;
  out["frame"] = result.frame.to_string();
  return out;
}

}  // namespace qparch
