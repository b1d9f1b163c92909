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


#include "qparch/distillation.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qparch {

namespace {

constexpr int64_t kToffoliDepth = 31;
constexpr int64_t kToffoliAStates = 7;
constexpr int64_t kPhaseGateDepth = 4;

}  // namespace

DistillationSpec DistillationSpec::at_level(int level) {
  DistillationSpec spec;
  spec.level = level;
  spec.volume_per_ancilla = distillation_volume(level);
  spec.cross_section = kDistillationCrossSection;
  spec.depth = kDistillationDepth;
  for (int n = 1; n < level; ++n) spec.cross_section *= kCircuitsPerLevel;
  return spec;
}

std::string_view costed_gate_name(CostedGate gate) {
  switch (gate) {
    case CostedGate::kS:
      return "S";
    case CostedGate::kSdg:
      return "S_DAG";
    case CostedGate::kT:
      return "T";
    case CostedGate::kToffoli:
      return "TOFFOLI";
  }
  return "?";
}

GateCost gate_cost(CostedGate gate) {
  GateCost cost;
  cost.gate = gate;
  switch (gate) {
    case CostedGate::kS:
    case CostedGate::kSdg:
      cost.depth_cycles = kPhaseGateDepth;
      cost.y_states_used_not_consumed = 1;
      break;
    case CostedGate::kT:
      cost.a_states_consumed = 1;
      break;
    case CostedGate::kToffoli:
      cost.depth_cycles = kToffoliDepth;
      cost.a_states_consumed = kToffoliAStates;
      break;
  }
  return cost;
}

int64_t distillation_volume(int level) {
  if (level < 1) throw std::invalid_argument("distillation level must be at least 1");
  int64_t volume = kDistillationCrossSection * kDistillationDepth;
  for (int n = 1; n < level; ++n) {
    if (volume > std::numeric_limits<int64_t>::max() / kCircuitsPerLevel) {
      throw std::overflow_error("distillation volume overflows at level " + std::to_string(level));
    }
    volume *= kCircuitsPerLevel;
  }
  return volume;
}

double factory_rate(double area, int level) {
  if (!(area > 0.0) || !std::isfinite(area)) throw std::invalid_argument("factory area must be positive");
  return area / static_cast<double>(distillation_volume(level));
}

int64_t required_factory_area(double consumption, int level) {
  if (!(consumption >= 0.0) || !std::isfinite(consumption)) {
    throw std::invalid_argument("consumption must be a non-negative number");
  }
  return static_cast<int64_t>(std::ceil(consumption * static_cast<double>(distillation_volume(level))));
}

double toffoli_time(const HardwareProfile &profile) {
  profile.validate();
  return static_cast<double>(kToffoliDepth) * profile.logical_cycle_time;
}

}  // namespace qparch
