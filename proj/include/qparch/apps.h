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


#ifndef QPARCH_APPS_H_
#define QPARCH_APPS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qparch/qec_model.h"

namespace qparch {

/// Shor's factoring built from carry-lookahead adders. The adder counts are
/// a calibration: 4 N^2 sequential adders of depth 4 log2(N) Toffolis give
/// the published 1.68e8 Toffoli depth at N = 1024.
struct ShorWorkload {
  int64_t bits = 1024;
  std::optional<int64_t> machine_logical_qubits;
  double adders_sequential_coeff = 4.0;  // adders = coeff * N^2
  double adder_depth_coeff = 4.0;        // Toffoli depth per adder = coeff * log2 N
  double toffolis_per_adder_coeff = 10.0;
  int64_t ancillas_per_toffoli = 7;
  int64_t app_qubits_per_bit = 6;

  void validate() const;
  double log2_bits() const;
  double adders_sequential() const;
  double adder_depth() const;  // Toffolis
  int64_t app_qubits() const { return app_qubits_per_bit * bits; }
};

/// First-quantized molecular dynamics on B particles.
struct SimWorkload {
  int64_t particles = 61;
  int bits_precision = 12;
  int64_t timesteps = 1024;

  /// Throws std::invalid_argument for B < 1, timesteps < 1, or a precision
  /// other than 12 bits (the operator table is only known at 12 bits).
  void validate() const;
  int64_t register_qubits_per_particle() const { return 3 * static_cast<int64_t>(bits_precision); }
};

/// Per-operator costs at 12-bit precision, per particle where noted.
struct SimOperatorCost {
  std::string name;
  int64_t memory_qubits = 0;  // maximum logical qubits, including distillation
  double depth_cycles = 0.0;  // per application
};

struct ResourceReport {
  std::string workload;
  int code_distance = 0;
  double logical_error_rate = 0.0;
  int64_t app_qubits = 0;
  int64_t distillation_qubits = 0;
  int64_t total_logical_qubits = 0;
  double logical_cycles = 0.0;
  double toffoli_depth = 0.0;
  int64_t virtual_qubits = 0;
  double chip_area_cm2 = 0.0;
  double runtime_seconds = 0.0;
  std::optional<double> production_rate;
  std::optional<double> consumption_rate;
  double throttle_factor = 1.0;
  // Failure probability with K counted in logical cycles.
  double failure_probability = 0.0;
  std::vector<SimOperatorCost> operators;

  /// Re-derives Q, virtual qubits, area, throttle and runtime from the stored
  /// fields and throws std::logic_error on any disagreement.
  void check_consistency(const HardwareProfile &profile) const;
};

inline constexpr double kSecondsPerDay = 86400.0;
inline constexpr double kToffoliCycles = 31.0;
// Physical spin pitch of 1 um, as cm^2 per virtual qubit.
inline constexpr double kCm2PerVirtualQubit = 1e-8;

/// 70 N / (124 log2 N) |A> states per logical cycle.
/// Throws std::invalid_argument for N < 4.
double shor_consumption_rate(const ShorWorkload &w);
double shor_consumption_rate(int64_t bits);

/// Throws InfeasibleError("no factory capacity") when a machine size is given
/// and does not exceed the 6N application qubits.
ResourceReport shor_estimate(const ShorWorkload &w, const HardwareProfile &profile, const CodePoint &code,
                             int level = 2);

/// 6.26e5 B + 1.55e5 + 2 * 2.57e4 logical cycles.
double sim_per_step_cycles(const SimWorkload &w);

std::vector<SimOperatorCost> sim_operator_costs(const SimWorkload &w);

ResourceReport sim_estimate(const SimWorkload &w, const HardwareProfile &profile, const CodePoint &code);

struct ShorSweep {
  std::vector<ResourceReport> unconstrained;
  std::vector<ResourceReport> constrained;  // empty without a machine size
  std::vector<int64_t> bits;
};

/// Rows follow the order of bit_sizes.
ShorSweep shor_sweep(const std::vector<int64_t> &bit_sizes, std::optional<int64_t> machine_logical_qubits,
                     const HardwareProfile &profile, const CodePoint &code, int level = 2);

}  // namespace qparch

#endif  // QPARCH_APPS_H_
