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

#include "qparch/pauli_frame.h"

#include <array>
#include <complex>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace qparch {

namespace {

constexpr std::array<std::string_view, 9> kGateNames = {"H", "S", "S_DAG", "CNOT", "X", "Y", "Z", "MX", "MZ"};

// Single-qubit conjugation tables indexed by the Pauli bit pattern
// (I, X, Z, Y). Pauli gates commute with every letter up to sign.
constexpr std::array<Pauli, 4> kIdentityMap = {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y};
// H: X <-> Z, Y -> -Y.
constexpr std::array<Pauli, 4> kHadamardMap = {Pauli::I, Pauli::Z, Pauli::X, Pauli::Y};
// S and S^dagger: X -> +-Y, Y -> -+X, Z -> Z.
constexpr std::array<Pauli, 4> kPhaseMap = {Pauli::I, Pauli::Y, Pauli::Z, Pauli::X};

const std::array<Pauli, 4> &single_qubit_map(GateKind kind) {
  switch (kind) {
    case GateKind::kH:
      return kHadamardMap;
    case GateKind::kS:
    case GateKind::kSdg:
      return kPhaseMap;
    case GateKind::kX:
    case GateKind::kY:
    case GateKind::kZ:
      return kIdentityMap;
    default:
      throw std::invalid_argument("gate " + std::string(gate_name(kind)) + " has no single-qubit conjugation");
  }
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, C(0, -1), C(0, 1), 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

}  // namespace

char pauli_char(Pauli p) { return "IXZY"[static_cast<uint8_t>(p)]; }

std::optional<Pauli> pauli_from_char(char c) {
  switch (c) {
    case 'I':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      return std::nullopt;
  }
}

std::string_view gate_name(GateKind kind) { return kGateNames.at(static_cast<size_t>(kind)); }

std::optional<GateKind> gate_from_name(std::string_view name) {
  for (size_t i = 0; i < kGateNames.size(); ++i) {
    if (kGateNames[i] == name) return static_cast<GateKind>(i);
  }
  if (name == "SDG" || name == "S_DAGGER") return GateKind::kSdg;
  if (name == "CX") return GateKind::kCnot;
  return std::nullopt;
}

GateKind inverse_gate(GateKind kind) {
  switch (kind) {
    case GateKind::kS:
      return GateKind::kSdg;
    case GateKind::kSdg:
      return GateKind::kS;
    case GateKind::kMX:
    case GateKind::kMZ:
      throw std::invalid_argument("measurements have no inverse");
    default:
      return kind;
  }
}

Pauli conjugate_letter(GateKind kind, Pauli p) { return single_qubit_map(kind)[static_cast<uint8_t>(p)]; }

std::pair<Pauli, Pauli> conjugate_cnot(Pauli control, Pauli target) {
  // X on the control spreads to the target; Z on the target spreads back.
  uint8_t c = static_cast<uint8_t>(control);
  uint8_t t = static_cast<uint8_t>(target);
  t ^= c & 1;
  c ^= t & 2;
  return {static_cast<Pauli>(c), static_cast<Pauli>(t)};
}

void PauliFrame::check_qubit(size_t q) const {
  if (q >= letters_.size()) {
    throw std::out_of_range("qubit " + std::to_string(q) + " outside frame of " + std::to_string(letters_.size()));
  }
}

void PauliFrame::set(size_t q, Pauli p) {
  check_qubit(q);
  letters_[q] = p;
}

void PauliFrame::fold(Pauli p, size_t q) {
  check_qubit(q);
  letters_[q] = letters_[q] * p;
}

void PauliFrame::conjugate(const CliffordGate &gate) {
  check_qubit(gate.q0);
  if (gate.kind == GateKind::kCnot) {
    check_qubit(gate.q1);
    if (gate.q0 == gate.q1) throw std::invalid_argument("CNOT control and target must differ");
    auto [c, t] = conjugate_cnot(letters_[gate.q0], letters_[gate.q1]);
    letters_[gate.q0] = c;
    letters_[gate.q1] = t;
    return;
  }
  if (gate.kind == GateKind::kMX || gate.kind == GateKind::kMZ) {
    throw std::invalid_argument("measurements do not conjugate the frame; use measure()");
  }
  letters_[gate.q0] = conjugate_letter(gate.kind, letters_[gate.q0]);
}

int interpret_outcome(Pauli frame_letter, Pauli basis, int raw_outcome) {
  if (raw_outcome != 1 && raw_outcome != -1) throw std::invalid_argument("raw outcome must be +1 or -1");
  if (basis == Pauli::I) throw std::invalid_argument("measurement basis must be X, Y or Z");
  return anticommutes(frame_letter, basis) ? -raw_outcome : raw_outcome;
}

int PauliFrame::measure(Pauli basis, size_t q, int raw_outcome) {
  check_qubit(q);
  int outcome = interpret_outcome(letters_[q], basis, raw_outcome);
  letters_[q] = Pauli::I;
  return outcome;
}

Eigen::MatrixXcd PauliFrame::dense(std::span<const uint32_t> targets) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (uint32_t q : targets) {
    check_qubit(q);
    Eigen::MatrixXcd next = Eigen::kroneckerProduct(out, pauli_matrix(letters_[q])).eval();
    out = std::move(next);
  }
  return out;
}

std::string PauliFrame::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Pauli p : letters_) s.push_back(pauli_char(p));
  return s;
}

Eigen::MatrixXcd frame_transform_gate(const PauliFrame &frame, std::span<const uint32_t> targets,
                                      const Eigen::MatrixXcd &u) {
  if (targets.empty() || targets.size() > 16) throw std::invalid_argument("gate needs between 1 and 16 targets");
  Eigen::Index dim = Eigen::Index{1} << targets.size();
  if (u.rows() != dim || u.cols() != dim) {
    throw std::invalid_argument("gate matrix dimension does not match " + std::to_string(targets.size()) +
                                " target(s)");
  }
  Eigen::MatrixXcd f = frame.dense(targets);
  return f * u * f.adjoint();
}

CircuitResult run_circuit(PauliFrame frame, std::span<const Instruction> circuit, std::span<const int> raw_outcomes) {
  CircuitResult result;
  size_t next_raw = 0;
  for (const Instruction &instr : circuit) {
    if (const auto *p = std::get_if<PauliInstr>(&instr)) {
      frame.fold(p->p, p->q);
    } else if (const auto *c = std::get_if<CliffordInstr>(&instr)) {
      frame.conjugate(c->gate);
    } else {
      const auto &m = std::get<MeasureInstr>(instr);
      if (next_raw >= raw_outcomes.size()) throw std::invalid_argument("measurement outcome stream underrun");
      result.outcomes.push_back(frame.measure(m.basis, m.q, raw_outcomes[next_raw++]));
    }
  }
  if (next_raw != raw_outcomes.size()) throw std::invalid_argument("measurement outcome stream overrun");
  result.frame = std::move(frame);
  return result;
}

}  // namespace qparch
