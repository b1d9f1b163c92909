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

#include "qparch/qec_model.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qparch/errors.h"

namespace qparch {

namespace {

// Distances beyond this are not physically meaningful and only guard the scan.
constexpr int kMaxDistance = 1 << 20;

void require_positive(double v, const char *name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
  }
}

void require_probability(double v, const char *name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in (0, 1)");
  }
}

void require_odd_distance(int d) {
  if (d < 1 || d % 2 == 0) {
    throw std::invalid_argument("code distance must be a positive odd integer, got " + std::to_string(d));
  }
}

int64_t ceil_div(int64_t a, int64_t b) { return (a + b - 1) / b; }

}  // namespace

void HardwareProfile::validate() const {
  require_positive(larmor_period, "larmor_period");
  require_positive(pulse_duration, "pulse_duration");
  require_positive(entangling_gate_time, "entangling_gate_time");
  require_positive(qnd_readout_time, "qnd_readout_time");
  require_positive(virtual_gate_time, "virtual_gate_time");
  require_positive(lattice_cycle_time, "lattice_cycle_time");
  require_positive(logical_cycle_time, "logical_cycle_time");
  require_probability(error_per_virtual_gate, "error_per_virtual_gate");
  require_probability(threshold, "threshold");
  require_positive(c1, "c1");
  require_positive(c2, "c2");
  require_odd_distance(code_distance);
}

double failure_probability(double eps_l, double k, double q) {
  if (!(eps_l >= 0.0 && eps_l <= 1.0)) {
    throw std::domain_error("logical error rate must lie in [0, 1]");
  }
  if (!(k >= 1.0) || !(q >= 1.0)) {
    throw std::invalid_argument("circuit depth and qubit count must be at least 1");
  }
  if (eps_l == 0.0) return 0.0;
  if (eps_l == 1.0) return 1.0;
  return -std::expm1(k * q * std::log1p(-eps_l));
}

double target_logical_error(const AlgorithmDemand &demand) {
  if (!(demand.circuit_depth >= 1.0) || !(demand.logical_qubits >= 1.0)) {
    throw std::invalid_argument("circuit depth and qubit count must be at least 1");
  }
  require_probability(demand.target_failure, "target_failure");
  double kq = demand.circuit_depth * demand.logical_qubits;
  return -std::expm1(std::log1p(-demand.target_failure) / kq);
}

double logical_error_rate(const HardwareProfile &profile, int d) {
  require_odd_distance(d);
  if (!(profile.error_per_virtual_gate < profile.threshold)) {
    throw InfeasibleError("error per virtual gate is not below threshold; the scaling law does not apply");
  }
  return profile.c1 * std::pow(profile.suppression_base(), (d + 1) / 2);
}

int64_t footprint(int d) {
  if (d < 1) throw std::invalid_argument("code distance must be at least 1");
  double dd = static_cast<double>(d);
  return std::llround(6240.0 * dd * dd / 961.0);
}

int64_t cnot_lattice_steps(int d) { return 13 * ceil_div(d, 4); }

int64_t hadamard_lattice_steps(int d) { return 13 * ceil_div(d, 8); }

CodePoint code_point(const HardwareProfile &profile, int d) {
  CodePoint cp;
  cp.distance = d;
  cp.logical_error_rate = logical_error_rate(profile, d);
  cp.virtual_per_logical = footprint(d);
  cp.cnot_lattice_steps = cnot_lattice_steps(d);
  cp.hadamard_lattice_steps = hadamard_lattice_steps(d);
  return cp;
}

CodePoint min_code_distance(const HardwareProfile &profile, double target) {
  if (!(target > 0.0)) throw std::invalid_argument("target logical error must be positive");
  if (!(profile.error_per_virtual_gate < profile.threshold) || !(profile.suppression_base() < 1.0)) {
    throw InfeasibleError("unreachable target: hardware error is not below threshold");
  }
  // Linear scan with the same evaluation as logical_error_rate so the
  // selected distance round-trips exactly.
  for (int d = 1; d <= kMaxDistance; d += 2) {
    if (logical_error_rate(profile, d) <= target) return code_point(profile, d);
  }
  throw InfeasibleError("unreachable target: no distance up to " + std::to_string(kMaxDistance));
}

LogicalGateTimes logical_gate_times(const HardwareProfile &profile, int d) {
  if (d < 1) throw std::invalid_argument("code distance must be at least 1");
  LogicalGateTimes t;
  t.cnot = static_cast<double>(cnot_lattice_steps(d)) * profile.lattice_cycle_time;
  t.hadamard = static_cast<double>(hadamard_lattice_steps(d)) * profile.lattice_cycle_time;
  t.measurement = profile.lattice_cycle_time;
  return t;
}

}  // namespace qparch
