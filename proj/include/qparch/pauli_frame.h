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

#ifndef QPARCH_PAULI_FRAME_H_
#define QPARCH_PAULI_FRAME_H_

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qparch {

/// A Pauli operator modulo phase, stored as its (x, z) bits: bit 0 is the X
/// component and bit 1 the Z component, so multiplication is XOR.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr Pauli operator*(Pauli a, Pauli b) {
  return static_cast<Pauli>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}

constexpr bool x_bit(Pauli p) { return static_cast<uint8_t>(p) & 1; }
constexpr bool z_bit(Pauli p) { return static_cast<uint8_t>(p) & 2; }

/// Symplectic product: true iff the two operators anticommute.
constexpr bool anticommutes(Pauli a, Pauli b) { return (x_bit(a) && z_bit(b)) != (z_bit(a) && x_bit(b)); }

char pauli_char(Pauli p);
std::optional<Pauli> pauli_from_char(char c);

enum class GateKind : uint8_t { kH, kS, kSdg, kCnot, kX, kY, kZ, kMX, kMZ };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

/// Number of qubits a gate acts on.
constexpr int gate_arity(GateKind kind) { return kind == GateKind::kCnot ? 2 : 1; }

/// Inverse within the gate set. Measurements have no inverse and are rejected.
GateKind inverse_gate(GateKind kind);

struct CliffordGate {
  GateKind kind = GateKind::kH;
  uint32_t q0 = 0;  // control for CNOT
  uint32_t q1 = 0;  // target for CNOT, unused otherwise

  static CliffordGate single(GateKind kind, uint32_t q) { return {kind, q, 0}; }
  static CliffordGate cnot(uint32_t control, uint32_t target) { return {GateKind::kCnot, control, target}; }
};

/// Letter of U P U^dagger for a single-qubit gate, phase discarded.
Pauli conjugate_letter(GateKind kind, Pauli p);

/// Letters of CNOT (P_c (x) P_t) CNOT on (control, target), phase discarded.
std::pair<Pauli, Pauli> conjugate_cnot(Pauli control, Pauli target);

/// Classical record of the Pauli corrections owed by each qubit. Pauli gates
/// are folded in rather than executed; Clifford gates move the record by
/// conjugation; measurements consult it to reinterpret raw outcomes.
class PauliFrame {
 public:
  PauliFrame() = default;
  explicit PauliFrame(size_t num_qubits) : letters_(num_qubits, Pauli::I) {}

  size_t num_qubits() const { return letters_.size(); }
  Pauli operator[](size_t q) const { return letters_.at(q); }
  std::span<const Pauli> letters() const { return letters_; }

  void set(size_t q, Pauli p);

  /// letters[q] <- letters[q] * p.
  void fold(Pauli p, size_t q);

  /// F <- U F U^dagger on the gate's targets. Throws std::out_of_range on bad
  /// targets and std::invalid_argument for measurement kinds or CNOT with
  /// equal control and target.
  void conjugate(const CliffordGate &gate);

  /// Negates raw_outcome (+1 / -1) iff the frame letter on q anticommutes with
  /// the basis, then resets that letter to I: a projective measurement leaves
  /// no pending correction on the measured qubit.
  int measure(Pauli basis, size_t q, int raw_outcome);

  /// Dense operator of the frame restricted to `targets`, first target most
  /// significant in the Kronecker product.
  Eigen::MatrixXcd dense(std::span<const uint32_t> targets) const;

  std::string to_string() const;

  friend bool operator==(const PauliFrame &, const PauliFrame &) = default;

 private:
  void check_qubit(size_t q) const;

  std::vector<Pauli> letters_;
};

/// Returns outcome, flipped when `frame_letter` anticommutes with `basis`.
int interpret_outcome(Pauli frame_letter, Pauli basis, int raw_outcome);

/// F U F^dagger for a gate U acting on `targets`: the operation the hardware
/// has to apply so that the deferred corrections stay valid. Throws
/// std::invalid_argument when U is not 2^k x 2^k for k targets.
Eigen::MatrixXcd frame_transform_gate(const PauliFrame &frame, std::span<const uint32_t> targets,
                                      const Eigen::MatrixXcd &u);

struct PauliInstr {
  Pauli p = Pauli::I;
  uint32_t q = 0;
};
struct CliffordInstr {
  CliffordGate gate;
};
struct MeasureInstr {
  Pauli basis = Pauli::Z;
  uint32_t q = 0;
};
using Instruction = std::variant<PauliInstr, CliffordInstr, MeasureInstr>;

struct CircuitResult {
  PauliFrame frame;
  std::vector<int> outcomes;
};

/// Executes instructions in order. raw_outcomes supplies one +1 / -1 value per
/// measurement; a short or long stream throws std::invalid_argument.
CircuitResult run_circuit(PauliFrame frame, std::span<const Instruction> circuit,
                          std::span<const int> raw_outcomes);

}  // namespace qparch

#endif  // QPARCH_PAULI_FRAME_H_
