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


#ifndef QPARCH_DISTILLATION_H_
#define QPARCH_DISTILLATION_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "qparch/qec_model.h"

namespace qparch {

// One level-1 |A> distillation circuit occupies 12 logical qubits for 6
// logical cycles. A level-n ancilla needs 16 level-(n-1) circuits.
inline constexpr int64_t kDistillationCrossSection = 12;
inline constexpr int64_t kDistillationDepth = 6;
inline constexpr int64_t kCircuitsPerLevel = 16;
// 15-to-1 protocol inputs per output; bookkeeping only, the volume model
// already includes them through kCircuitsPerLevel.
inline constexpr int64_t kInputsPerOutput = 15;

struct DistillationSpec {
  int level = 1;
  int64_t volume_per_ancilla = 0;  // qubit * cycles
  int64_t cross_section = 0;       // logical qubits of one pipeline
  int64_t depth = 0;               // logical cycles of one circuit

  static DistillationSpec at_level(int level);
};

struct FactorySpec {
  double area = 0.0;  // logical qubits
  int level = 2;
};

enum class CostedGate { kS, kSdg, kT, kToffoli };

struct GateCost {
  CostedGate gate = CostedGate::kT;
  // Depth in logical cycles. Unknown for T on its own.
  std::optional<int64_t> depth_cycles;
  int64_t a_states_consumed = 0;
  int64_t y_states_used_not_consumed = 0;
};

std::string_view costed_gate_name(CostedGate gate);
GateCost gate_cost(CostedGate gate);

/// 72 * 16^(level - 1). Throws std::invalid_argument for level < 1 and
/// std::overflow_error past int64.
int64_t distillation_volume(int level);

/// Time-averaged ancillas per logical cycle, area / volume.
/// Throws std::invalid_argument unless area > 0.
double factory_rate(double area, int level);

/// ceil(consumption * volume). Throws std::invalid_argument on negative or
/// non-finite consumption.
int64_t required_factory_area(double consumption, int level);

/// 31 logical cycles.
double toffoli_time(const HardwareProfile &profile);

}  // namespace qparch

#endif  // QPARCH_DISTILLATION_H_
