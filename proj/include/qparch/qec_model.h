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

#ifndef QPARCH_QEC_MODEL_H_
#define QPARCH_QEC_MODEL_H_

#include <cstdint>

namespace qparch {

/// Timing and error constants for every layer of the machine, from the
/// physical spin up to the error-corrected logical qubit. Times are seconds.
///
/// The defaults describe the optically controlled quantum-dot platform the
/// model was built around: 40 ps Larmor period, 32 ns virtual gates, 256 ns
/// surface-code refresh and a 30 us logical (CNOT) cycle.
struct HardwareProfile {
  double larmor_period = 40e-12;
  double pulse_duration = 14e-12;
  double entangling_gate_time = 32e-9;
  double qnd_readout_time = 1e-9;
  double virtual_gate_time = 32e-9;
  double lattice_cycle_time = 256e-9;
  double logical_cycle_time = 30e-6;
  double error_per_virtual_gate = 1e-3;
  double threshold = 9e-3;
  double c1 = 0.13;
  double c2 = 0.61;
  // Distance used by the application reports. The scaling-law inversion
  // gives 29 for the 1024-bit factoring workload.
  int code_distance = 31;

  /// Throws std::invalid_argument on non-positive times, probabilities
  /// outside (0, 1), non-positive fit constants, or an even / non-positive
  /// code distance. Does not require operating below threshold.
  void validate() const;

  /// Base of the logical error power law, c2 * eps_V / eps_thresh.
  double suppression_base() const { return c2 * error_per_virtual_gate / threshold; }
};

/// A chosen surface-code distance together with what follows from it.
struct CodePoint {
  int distance = 0;
  double logical_error_rate = 0.0;
  int64_t virtual_per_logical = 0;
  int64_t cnot_lattice_steps = 0;
  int64_t hadamard_lattice_steps = 0;
};

/// Units of an algorithm depth K.
enum class DepthUnits { kLatticeCycles, kLogicalCycles };

struct AlgorithmDemand {
  double circuit_depth = 1;  // K, may exceed 2^53 only in exotic workloads
  DepthUnits depth_units = DepthUnits::kLogicalCycles;
  double logical_qubits = 1;  // Q
  double target_failure = 1e-2;
};

struct LogicalGateTimes {
  double cnot = 0.0;
  double hadamard = 0.0;
  double measurement = 0.0;
};

/// 1 - (1 - eps_l)^(k*q), evaluated as -expm1(k*q*log1p(-eps_l)) so tiny
/// products do not round to zero.
/// Throws std::domain_error if eps_l is outside [0, 1] and
/// std::invalid_argument if k or q is below 1.
double failure_probability(double eps_l, double k, double q);

/// Largest per-gate logical error for which failure_probability stays at or
/// below demand.target_failure.
double target_logical_error(const AlgorithmDemand &demand);

/// c1 * (c2 * eps_V / eps_thresh)^((d + 1) / 2).
/// Throws std::invalid_argument for even or non-positive d and
/// InfeasibleError when the profile is not below threshold.
double logical_error_rate(const HardwareProfile &profile, int d);

/// Smallest odd d whose logical error rate does not exceed target.
/// Throws InfeasibleError("unreachable target") when the profile is at or
/// above threshold or the suppression base is >= 1.
CodePoint min_code_distance(const HardwareProfile &profile, double target);

/// Builds the CodePoint for a fixed distance.
CodePoint code_point(const HardwareProfile &profile, int d);

/// Virtual qubits per logical qubit: round(6240 * d^2 / 961), calibrated to
/// 6240 at d = 31. d = 1 is an extrapolation of that one calibration point.
int64_t footprint(int d);

int64_t cnot_lattice_steps(int d);      // 13 * ceil(d / 4), defect braiding
int64_t hadamard_lattice_steps(int d);  // 13 * ceil(d / 8), lattice shift

LogicalGateTimes logical_gate_times(const HardwareProfile &profile, int d);

}  // namespace qparch

#endif  // QPARCH_QEC_MODEL_H_
