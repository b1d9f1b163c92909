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

#ifndef QPARCH_PULSE_SIM_H_
#define QPARCH_PULSE_SIM_H_

// Single-spin pulse simulator for the physical and virtual layers.
//
// The spin precesses about +Z at the Larmor angular frequency
// w_L = 2 pi / larmor_period, shifted by a quasi-static detuning drawn once
// per Monte-Carlo sample. Laser pulses drive rotations about a fixed lab
// axis while that drift keeps acting, so a pulse of finite duration is the
// joint exponential of drive and drift. Everything is evaluated in the lab
// frame; sequences are built so that their noiseless lab-frame unitary is
// the intended operation.
//
// A "Hadamard pulse" drives X at exactly w_L for larmor_period / sqrt(8):
// the joint axis is (X + Z) / sqrt(2) and the joint angle is pi.

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qparch {

using Unitary2 = Eigen::Matrix2cd;
using Axis = std::array<double, 3>;

enum class SegmentKind {
  kFreePrecession,
  kPulse,            // finite-duration drive concurrent with the drift
  kInstantRotation,  // idealized rotation with no duration and no drift
};

struct PulseSegment {
  SegmentKind kind = SegmentKind::kFreePrecession;
  double duration = 0.0;
  Axis axis = {0.0, 0.0, 1.0};
  // Rotation angle of the drive alone over `duration` (pulses), or the full
  // rotation angle (instant rotations). Pulse error scales this value.
  double nominal_angle = 0.0;

  static PulseSegment free_precession(double duration);
  /// Throws std::invalid_argument for a negative duration or a non-unit axis.
  static PulseSegment pulse(double duration, const Axis &axis, double nominal_angle);
  static PulseSegment instant_rotation(const Axis &axis, double angle);
};

enum class SequenceLabel { k8H, kCP, kUDD, kBB1, kFree, kCustom };

std::string_view sequence_name(SequenceLabel label);
std::optional<SequenceLabel> sequence_from_name(std::string_view name);

struct PulseSequence {
  std::vector<PulseSegment> segments;
  SequenceLabel label = SequenceLabel::kCustom;

  double duration() const;
  /// Finite-duration pulses only; instant rotations are not laser pulses.
  size_t pulse_count() const;
  /// Start times of the finite pulses.
  std::vector<double> pulse_starts() const;
  void append(const PulseSequence &other);
};

struct NoiseModel {
  // Ensemble dephasing time. +infinity disables detuning noise.
  double t2_star = 2e-9;
  // Systematic relative deviation of every drive angle.
  double pulse_error = 0.0;
  int64_t samples = 1;
  uint64_t seed = 0;
  // Intrinsic dephasing, applied as a terminal dephasing channel with
  // coherence exp(-T / t2). Off by default.
  double t2 = std::numeric_limits<double>::infinity();
  // Worker threads; 0 picks the hardware concurrency. Results do not depend
  // on this value.
  unsigned threads = 0;

  void validate() const;
  /// Standard deviation of the detuning so that free induction decays as
  /// exp(-(t / t2_star)^2).
  double detuning_sigma() const;
};

struct ProcessResult {
  double infidelity = 0.0;
  std::vector<double> fidelities;
};

/// exp(-i angle/2 n.sigma); `axis` need not be normalized but must be non-zero.
Unitary2 rotation(const Axis &axis, double angle);

/// |tr(target^dagger actual)|^2 / 4.
double process_fidelity(const Unitary2 &target, const Unitary2 &actual);

/// True when a and b agree up to a global phase within tol (in fidelity).
bool equal_up_to_phase(const Unitary2 &a, const Unitary2 &b, double tol = 1e-9);

Unitary2 segment_unitary(const PulseSegment &seg, double larmor_period, double detuning, double pulse_error);

/// Time-ordered product of the segment unitaries.
Unitary2 sequence_unitary(const PulseSequence &seq, double larmor_period, double detuning, double pulse_error);

PulseSegment hadamard_pulse(double larmor_period);

/// [H pulse, free precession by theta, H pulse], i.e. H Rz(theta) H = Rx(theta).
/// Throws std::invalid_argument unless 0 <= theta < 4 pi.
PulseSequence composite_x_gate(double theta, double larmor_period);

PulseSequence free_evolution(double duration);

enum class DecouplingKind { k8H, kCP, kUDD };

/// Four composite-X pi gates inside a window of 8 tau.
///
///  CP:  gate centres at tau, 3 tau, 5 tau, 7 tau.
///  UDD: gate centres at 8 tau sin^2(j pi / 10), j = 1..4.
///  8H:  CP centres snapped to whole Larmor periods, the second and fourth
///       shifted by a further 3/4 period, inside a window snapped to whole
///       periods. The shift turns the lab-frame X gates into an X, Y, X, Y
///       cycle in the precessing frame, which cancels drive-amplitude error
///       to first order while the echo structure cancels static detuning.
///
/// Throws std::invalid_argument when tau is too small to fit the pulses.
PulseSequence build_sequence(DecouplingKind kind, double tau, double larmor_period);

enum class InsertionStyle {
  // Each BB1 rotation is one idealized rotation whose angle carries the
  // systematic pulse error.
  kRotationPulse,
  // Each BB1 rotation is synthesized from three Hadamard pulses and free
  // precession; see three_pulse_rotation.
  kHadamardPulses,
};

/// Four 8H blocks, each followed by one BB1 rotation: R_X(theta), then
/// R_phi(pi), R_3phi(2 pi), R_phi(pi) with phi = acos(-theta / (4 pi)).
/// With kRotationPulse the sequence lasts exactly 4 x 8H.
/// Throws std::invalid_argument unless 0 <= theta < 2 pi.
PulseSequence bb1_virtual_gate(double theta, double tau, double larmor_period,
                               InsertionStyle style = InsertionStyle::kRotationPulse);

/// Realizes u (up to phase) as H, wait, H, wait, H, wait, with every wait
/// shorter than one Larmor period.
PulseSequence three_pulse_rotation(const Unitary2 &u, double larmor_period);

/// Monte-Carlo average of 1 - |tr(target^dagger U)|^2 / 4 over quasi-static
/// detunings. Sample i draws from a stream seeded by (seed, i), so the result
/// is bit-identical for a fixed seed and sample count whatever the thread
/// count, and different pulse errors see the same detunings.
ProcessResult process_infidelity(const PulseSequence &seq, const NoiseModel &noise, const Unitary2 &target,
                                 double larmor_period);

/// sqrt((d - |tr(u^dagger u_approx)|) / d). Throws std::invalid_argument on a
/// dimension mismatch or when either input is not unitary within 1e-9.
double approx_accuracy(const Eigen::MatrixXcd &u, const Eigen::MatrixXcd &u_approx);

struct SweepRow {
  std::string sequence;
  double pulse_error = 0.0;
  double tau = 0.0;
  int64_t samples = 0;
  uint64_t seed = 0;
  double infidelity = 0.0;
};

struct SweepConfig {
  std::vector<SequenceLabel> sequences;
  std::vector<double> pulse_errors;
  double tau = 1e-9;
  int64_t samples = 20000;
  uint64_t seed = 0;
  double t2_star = 2e-9;
  double larmor_period = 40e-12;
  double bb1_theta = 3.141592653589793;
  // Also emit one "free" row per pulse error: unpulsed evolution over 8 tau.
  bool baseline = false;
  unsigned threads = 0;
};

/// One row per (sequence, pulse error) in input order, baseline rows last.
/// Decoupling sequences and the free baseline target the identity; BB1
/// targets R_X(bb1_theta).
std::vector<SweepRow> run_pulse_sweep(const SweepConfig &config);

}  // namespace qparch

#endif  // QPARCH_PULSE_SIM_H_
