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


#include "qparch/apps.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qparch/distillation.h"
#include "qparch/errors.h"

namespace qparch {

namespace {

constexpr double kKineticCycles = 1.55e5;
constexpr double kPotentialCyclesPerParticle = 6.26e5;
constexpr double kQftCycles = 2.57e4;
constexpr int64_t kKineticMemoryPerParticle = 334;
constexpr int64_t kPotentialMemoryPerParticle = 369;
constexpr int64_t kQftMemoryPerParticle = 272;
// Single-point calibration: 6650 application qubits for 61 particles.
constexpr int64_t kSimAppQubitsPerParticle = 109;
constexpr int64_t kSimFactoryQubitsPerParticle = 260;

void fill_machine(ResourceReport &r, const HardwareProfile &profile, const CodePoint &code) {
  r.code_distance = code.distance;
  r.logical_error_rate = code.logical_error_rate;
  r.total_logical_qubits = r.app_qubits + r.distillation_qubits;
  r.virtual_qubits = r.total_logical_qubits * footprint(code.distance);
  r.chip_area_cm2 = static_cast<double>(r.virtual_qubits) * kCm2PerVirtualQubit;
  r.runtime_seconds = r.logical_cycles * profile.logical_cycle_time * r.throttle_factor;
  r.failure_probability = failure_probability(code.logical_error_rate, std::max(1.0, r.logical_cycles),
                                              static_cast<double>(std::max<int64_t>(1, r.total_logical_qubits)));
}

void check_code(const CodePoint &code) {
  if (code.distance < 1 || code.distance % 2 == 0) throw std::invalid_argument("code distance must be odd and positive");
}

}  // namespace

void ShorWorkload::validate() const {
  if (bits < 4) throw std::invalid_argument("bits must be at least 4");
  if (!(adders_sequential_coeff > 0.0) || !(adder_depth_coeff > 0.0) || !(toffolis_per_adder_coeff > 0.0)) {
    throw std::invalid_argument("adder coefficients must be positive");
  }
  if (ancillas_per_toffoli < 0 || app_qubits_per_bit < 1) throw std::invalid_argument("invalid per-gate counts");
  if (machine_logical_qubits && *machine_logical_qubits < 1) {
    throw std::invalid_argument("machine size must be positive");
  }
}

double ShorWorkload::log2_bits() const { return std::log2(static_cast<double>(bits)); }

double ShorWorkload::adders_sequential() const {
  double n = static_cast<double>(bits);
  return adders_sequential_coeff * n * n;
}

double ShorWorkload::adder_depth() const { return adder_depth_coeff * log2_bits(); }

void SimWorkload::validate() const {
  if (particles < 1) throw std::invalid_argument("particles must be at least 1");
  if (timesteps < 1) throw std::invalid_argument("timesteps must be at least 1");
  if (bits_precision != 12) throw std::invalid_argument("only 12-bit spatial precision is supported");
}

void ResourceReport::check_consistency(const HardwareProfile &profile) const {
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); };
  if (total_logical_qubits != app_qubits + distillation_qubits) throw std::logic_error("Q != app + distillation");
  if (virtual_qubits != total_logical_qubits * footprint(code_distance)) {
    throw std::logic_error("virtual qubits != Q * footprint(d)");
  }
  if (!close(chip_area_cm2, static_cast<double>(virtual_qubits) * kCm2PerVirtualQubit)) {
    throw std::logic_error("chip area disagrees with virtual qubits");
  }
  if (!(throttle_factor >= 1.0)) throw std::logic_error("throttle factor below 1");
  if (production_rate && consumption_rate &&
      !close(throttle_factor, std::max(1.0, *consumption_rate / *production_rate))) {
    throw std::logic_error("throttle factor disagrees with rates");
  }
  if (!close(runtime_seconds, logical_cycles * profile.logical_cycle_time * throttle_factor)) {
    throw std::logic_error("runtime disagrees with cycles");
  }
}

double shor_consumption_rate(const ShorWorkload &w) {
  w.validate();
  double n = static_cast<double>(w.bits);
  double toffolis = w.toffolis_per_adder_coeff * n;
  double cycles = kToffoliCycles * w.adder_depth();
  return toffolis * static_cast<double>(w.ancillas_per_toffoli) / cycles;
}

double shor_consumption_rate(int64_t bits) {
  ShorWorkload w;
  w.bits = bits;
  return shor_consumption_rate(w);
}

ResourceReport shor_estimate(const ShorWorkload &w, const HardwareProfile &profile, const CodePoint &code, int level) {
  w.validate();
  profile.validate();
  check_code(code);
  ResourceReport r;
  r.workload = "shor";
  r.app_qubits = w.app_qubits();
  r.toffoli_depth = w.adders_sequential() * w.adder_depth();
  r.logical_cycles = kToffoliCycles * r.toffoli_depth;
  double consumption = shor_consumption_rate(w);
  r.consumption_rate = consumption;
  if (w.machine_logical_qubits) {
    int64_t area = *w.machine_logical_qubits - r.app_qubits;
    if (area <= 0) {
      throw InfeasibleError("no factory capacity: machine of " + std::to_string(*w.machine_logical_qubits) +
                            " logical qubits cannot hold " + std::to_string(r.app_qubits) + " application qubits");
    }
    r.distillation_qubits = area;
    r.production_rate = factory_rate(static_cast<double>(area), level);
    r.throttle_factor = std::max(1.0, consumption / *r.production_rate);
  } else {
    r.distillation_qubits = required_factory_area(consumption, level);
    r.production_rate = r.distillation_qubits > 0 ? factory_rate(static_cast<double>(r.distillation_qubits), level) : 0.0;
    r.throttle_factor = 1.0;
  }
  fill_machine(r, profile, code);
  r.check_consistency(profile);
  return r;
}

double sim_per_step_cycles(const SimWorkload &w) {
  w.validate();
  return kPotentialCyclesPerParticle * static_cast<double>(w.particles) + kKineticCycles + 2.0 * kQftCycles;
}

std::vector<SimOperatorCost> sim_operator_costs(const SimWorkload &w) {
  w.validate();
  double b = static_cast<double>(w.particles);
  return {
      {"kinetic", kKineticMemoryPerParticle * w.particles, kKineticCycles},
      {"potential", kPotentialMemoryPerParticle * w.particles, kPotentialCyclesPerParticle * b},
      {"qft", kQftMemoryPerParticle * w.particles, kQftCycles},
  };
}

ResourceReport sim_estimate(const SimWorkload &w, const HardwareProfile &profile, const CodePoint &code) {
  w.validate();
  profile.validate();
  check_code(code);
  ResourceReport r;
  r.workload = "sim";
  // One more QFT on the time register reads out the energy.
  r.logical_cycles = static_cast<double>(w.timesteps) * sim_per_step_cycles(w) + kQftCycles;
  r.toffoli_depth = r.logical_cycles / kToffoliCycles;
  r.app_qubits = kSimAppQubitsPerParticle * w.particles;
  r.distillation_qubits = kSimFactoryQubitsPerParticle * w.particles;
  r.production_rate = factory_rate(static_cast<double>(r.distillation_qubits), 2);
  r.throttle_factor = 1.0;
  r.operators = sim_operator_costs(w);
  fill_machine(r, profile, code);
  r.check_consistency(profile);
  return r;
}

ShorSweep shor_sweep(const std::vector<int64_t> &bit_sizes, std::optional<int64_t> machine_logical_qubits,
                     const HardwareProfile &profile, const CodePoint &code, int level) {
  if (bit_sizes.empty()) throw std::invalid_argument("sweep needs at least one bit size");
  ShorSweep sweep;
  for (int64_t n : bit_sizes) {
    ShorWorkload w;
    w.bits = n;
    sweep.bits.push_back(n);
    sweep.unconstrained.push_back(shor_estimate(w, profile, code, level));
    if (machine_logical_qubits) {
      w.machine_logical_qubits = machine_logical_qubits;
      sweep.constrained.push_back(shor_estimate(w, profile, code, level));
    }
  }
  return sweep;
}

}  // namespace qparch
