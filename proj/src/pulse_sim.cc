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

#include "qparch/pulse_sim.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace qparch {

namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double norm(const Axis &a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

double larmor_rate(double larmor_period) { return kTwoPi / larmor_period; }

// exp(-i t/2 v.sigma) for an angular-velocity vector v.
Unitary2 evolve(const Axis &v, double t) {
  double n = norm(v);
  if (n == 0.0 || t == 0.0) return Unitary2::Identity();
  return rotation(v, n * t);
}

// Wraps an angle into [0, 2 pi).
double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Unitary2 hadamard_matrix() {
  Unitary2 h;
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

// Pi-gate length of the composite X: two Hadamard pulses around half a
// Larmor period of precession.
double composite_pi_duration(double larmor_period) {
  return 2.0 * larmor_period / std::sqrt(8.0) + 0.5 * larmor_period;
}

PulseSequence place_pi_gates(const std::array<double, 4> &centres, double window, double larmor_period,
                             SequenceLabel label) {
  const double gate = composite_pi_duration(larmor_period);
  PulseSequence x = composite_x_gate(kPi, larmor_period);
  PulseSequence seq;
  seq.label = label;
  double cursor = 0.0;
  for (double c : centres) {
    double wait = c - 0.5 * gate - cursor;
    if (wait < 0.0) throw std::invalid_argument("tau too small to fit pulses");
    seq.segments.push_back(PulseSegment::free_precession(wait));
    seq.append(x);
    cursor = c + 0.5 * gate;
  }
  if (window < cursor) throw std::invalid_argument("tau too small to fit pulses");
  seq.segments.push_back(PulseSegment::free_precession(window - cursor));
  return seq;
}

}  // namespace

PulseSegment PulseSegment::free_precession(double duration) {
  if (!(duration >= 0.0)) throw std::invalid_argument("segment duration must be non-negative");
  PulseSegment s;
  s.kind = SegmentKind::kFreePrecession;
  s.duration = duration;
  return s;
}

PulseSegment PulseSegment::pulse(double duration, const Axis &axis, double nominal_angle) {
  if (!(duration >= 0.0)) throw std::invalid_argument("segment duration must be non-negative");
  if (std::abs(norm(axis) - 1.0) > 1e-12) throw std::invalid_argument("pulse axis must be a unit vector");
  PulseSegment s;
  s.kind = SegmentKind::kPulse;
  s.duration = duration;
  s.axis = axis;
  s.nominal_angle = nominal_angle;
  return s;
}

PulseSegment PulseSegment::instant_rotation(const Axis &axis, double angle) {
  if (std::abs(norm(axis) - 1.0) > 1e-12) throw std::invalid_argument("rotation axis must be a unit vector");
  PulseSegment s;
  s.kind = SegmentKind::kInstantRotation;
  s.axis = axis;
  s.nominal_angle = angle;
  return s;
}

std::string_view sequence_name(SequenceLabel label) {
  switch (label) {
    case SequenceLabel::k8H:
      return "8h";
    case SequenceLabel::kCP:
      return "cp";
    case SequenceLabel::kUDD:
      return "udd";
    case SequenceLabel::kBB1:
      return "bb1";
    case SequenceLabel::kFree:
      return "free";
    case SequenceLabel::kCustom:
      return "custom";
  }
  return "custom";
}

std::optional<SequenceLabel> sequence_from_name(std::string_view name) {
  for (auto label : {SequenceLabel::k8H, SequenceLabel::kCP, SequenceLabel::kUDD, SequenceLabel::kBB1,
                     SequenceLabel::kFree, SequenceLabel::kCustom}) {
    if (sequence_name(label) == name) return label;
  }
  if (name == "8H") return SequenceLabel::k8H;
  return std::nullopt;
}

double PulseSequence::duration() const {
  double total = 0.0;
  for (const auto &s : segments) total += s.duration;
  return total;
}

size_t PulseSequence::pulse_count() const {
  return static_cast<size_t>(
      std::count_if(segments.begin(), segments.end(), [](const PulseSegment &s) { return s.kind == SegmentKind::kPulse; }));
}

std::vector<double> PulseSequence::pulse_starts() const {
  std::vector<double> starts;
  double t = 0.0;
  for (const auto &s : segments) {
    if (s.kind == SegmentKind::kPulse) starts.push_back(t);
    t += s.duration;
  }
  return starts;
}

void PulseSequence::append(const PulseSequence &other) {
  segments.insert(segments.end(), other.segments.begin(), other.segments.end());
}

void NoiseModel::validate() const {
  if (!(t2_star > 0.0)) throw std::invalid_argument("t2_star must be positive");
  if (!(t2 > 0.0)) throw std::invalid_argument("t2 must be positive");
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (!std::isfinite(pulse_error)) throw std::invalid_argument("pulse_error must be finite");
}

double NoiseModel::detuning_sigma() const {
  if (std::isinf(t2_star)) return 0.0;
  return std::sqrt(2.0) / t2_star;
}

Unitary2 rotation(const Axis &axis, double angle) {
  double n = norm(axis);
  if (n == 0.0) throw std::invalid_argument("rotation axis must be non-zero");
  double x = axis[0] / n, y = axis[1] / n, z = axis[2] / n;
  double c = std::cos(0.5 * angle), s = std::sin(0.5 * angle);
  Unitary2 u;
  u << C(c, -s * z), C(-s * y, -s * x), C(s * y, -s * x), C(c, s * z);
  return u;
}

double process_fidelity(const Unitary2 &target, const Unitary2 &actual) {
  return std::norm((target.adjoint() * actual).trace()) / 4.0;
}

bool equal_up_to_phase(const Unitary2 &a, const Unitary2 &b, double tol) {
  return 1.0 - process_fidelity(a, b) < tol;
}

Unitary2 segment_unitary(const PulseSegment &seg, double larmor_period, double detuning, double pulse_error) {
  double drift = larmor_rate(larmor_period) + detuning;
  switch (seg.kind) {
    case SegmentKind::kFreePrecession:
      return evolve({0.0, 0.0, drift}, seg.duration);
    case SegmentKind::kInstantRotation:
      return rotation(seg.axis, seg.nominal_angle * (1.0 + pulse_error));
    case SegmentKind::kPulse: {
      if (seg.duration == 0.0) return Unitary2::Identity();
      double rate = seg.nominal_angle * (1.0 + pulse_error) / seg.duration;
      Axis v = {rate * seg.axis[0], rate * seg.axis[1], rate * seg.axis[2] + drift};
      return evolve(v, seg.duration);
    }
  }
  return Unitary2::Identity();
}

Unitary2 sequence_unitary(const PulseSequence &seq, double larmor_period, double detuning, double pulse_error) {
  Unitary2 u = Unitary2::Identity();
  for (const auto &seg : seq.segments) u = segment_unitary(seg, larmor_period, detuning, pulse_error) * u;
  return u;
}

PulseSegment hadamard_pulse(double larmor_period) {
  double duration = larmor_period / std::sqrt(8.0);
  return PulseSegment::pulse(duration, {1.0, 0.0, 0.0}, larmor_rate(larmor_period) * duration);
}

PulseSequence composite_x_gate(double theta, double larmor_period) {
  if (!(theta >= 0.0 && theta < 2.0 * kTwoPi)) throw std::invalid_argument("theta must lie in [0, 4 pi)");
  PulseSequence seq;
  seq.label = SequenceLabel::kCustom;
  seq.segments = {hadamard_pulse(larmor_period), PulseSegment::free_precession(theta / larmor_rate(larmor_period)),
                  hadamard_pulse(larmor_period)};
  return seq;
}

PulseSequence free_evolution(double duration) {
  PulseSequence seq;
  seq.label = SequenceLabel::kFree;
  seq.segments = {PulseSegment::free_precession(duration)};
  return seq;
}

PulseSequence build_sequence(DecouplingKind kind, double tau, double larmor_period) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  if (!(larmor_period > 0.0)) throw std::invalid_argument("larmor_period must be positive");
  const double window = 8.0 * tau;
  switch (kind) {
    case DecouplingKind::kCP:
      return place_pi_gates({tau, 3 * tau, 5 * tau, 7 * tau}, window, larmor_period, SequenceLabel::kCP);
    case DecouplingKind::kUDD: {
      std::array<double, 4> centres{};
      for (int j = 1; j <= 4; ++j) {
        double s = std::sin(j * kPi / 10.0);
        centres[j - 1] = window * s * s;
      }
      return place_pi_gates(centres, window, larmor_period, SequenceLabel::kUDD);
    }
    case DecouplingKind::k8H: {
      constexpr std::array<double, 4> kPhaseOffset = {0.0, 0.75, 0.0, 0.75};
      std::array<double, 4> centres{};
      for (int j = 0; j < 4; ++j) {
        double cp_centre = (2 * j + 1) * tau;
        centres[j] = (std::round(cp_centre / larmor_period) + kPhaseOffset[j]) * larmor_period;
      }
      double snapped = std::round(window / larmor_period) * larmor_period;
      return place_pi_gates(centres, snapped, larmor_period, SequenceLabel::k8H);
    }
  }
  throw std::invalid_argument("unknown decoupling kind");
}

PulseSequence three_pulse_rotation(const Unitary2 &u, double larmor_period) {
  // u = Rz(a) H Rz(b) H Rz(c) H, so u H = Rz(a) Rx(b) Rz(c): a ZXZ Euler
  // decomposition of u H. Pulses come first in time, waits realize the
  // Z rotations through Larmor precession.
  Unitary2 w = u * hadamard_matrix();
  w /= std::sqrt(w.determinant());
  double b = 2.0 * std::atan2(std::abs(w(1, 0)), std::abs(w(0, 0)));
  double a_plus_c = std::abs(w(0, 0)) > 1e-12 ? -2.0 * std::arg(w(0, 0)) : 0.0;
  double a_minus_c = std::abs(w(1, 0)) > 1e-12 ? 2.0 * std::arg(C(0, 1) * w(1, 0)) : 0.0;
  double a = 0.5 * (a_plus_c + a_minus_c);
  double c = 0.5 * (a_plus_c - a_minus_c);

  double rate = larmor_rate(larmor_period);
  PulseSequence seq;
  seq.label = SequenceLabel::kCustom;
  for (double angle : {c, b, a}) {
    seq.segments.push_back(hadamard_pulse(larmor_period));
    seq.segments.push_back(PulseSegment::free_precession(wrap_angle(angle) / rate));
  }
  return seq;
}

PulseSequence bb1_virtual_gate(double theta, double tau, double larmor_period, InsertionStyle style) {
  if (!(theta >= 0.0 && theta < kTwoPi)) throw std::invalid_argument("theta must lie in [0, 2 pi)");
  const double phi = std::acos(-theta / (4.0 * kPi));
  const std::array<std::pair<Axis, double>, 4> rotations = {{
      {{1.0, 0.0, 0.0}, theta},
      {{std::cos(phi), std::sin(phi), 0.0}, kPi},
      {{std::cos(3 * phi), std::sin(3 * phi), 0.0}, kTwoPi},
      {{std::cos(phi), std::sin(phi), 0.0}, kPi},
  }};
  const PulseSequence block = build_sequence(DecouplingKind::k8H, tau, larmor_period);
  PulseSequence seq;
  seq.label = SequenceLabel::kBB1;
  for (const auto &[axis, angle] : rotations) {
    seq.append(block);
    if (style == InsertionStyle::kRotationPulse) {
      seq.segments.push_back(PulseSegment::instant_rotation(axis, angle));
    } else {
      seq.append(three_pulse_rotation(rotation(axis, angle), larmor_period));
    }
  }
  return seq;
}

ProcessResult process_infidelity(const PulseSequence &seq, const NoiseModel &noise, const Unitary2 &target,
                                 double larmor_period) {
  noise.validate();
  const double sigma = noise.detuning_sigma();
  const double duration = seq.duration();
  const double dephase_p = std::isinf(noise.t2) ? 0.0 : 0.5 * (1.0 - std::exp(-duration / noise.t2));
  Unitary2 z;
  z << 1, 0, 0, -1;

  const size_t n = static_cast<size_t>(noise.samples);
  ProcessResult result;
  result.fidelities.assign(n, 0.0);

  auto work = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      double detuning = 0.0;
      if (sigma > 0.0) {
        std::mt19937_64 rng(splitmix64(noise.seed ^ splitmix64(i)));
        std::normal_distribution<double> normal(0.0, sigma);
        detuning = normal(rng);
      }
      Unitary2 u = sequence_unitary(seq, larmor_period, detuning, noise.pulse_error);
      double f = process_fidelity(target, u);
      if (dephase_p > 0.0) f = (1.0 - dephase_p) * f + dephase_p * process_fidelity(target, z * u);
      result.fidelities[i] = f;
    }
  };

  unsigned threads = noise.threads ? noise.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(1, n / 256)));
  if (threads <= 1) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    size_t chunk = (n + threads - 1) / threads;
    for (size_t begin = 0; begin < n; begin += chunk) pool.emplace_back(work, begin, std::min(n, begin + chunk));
  }

  double sum = 0.0;
  for (double f : result.fidelities) sum += f;
  result.infidelity = std::clamp(1.0 - sum / static_cast<double>(n), 0.0, 1.0);
  return result;
}

double approx_accuracy(const Eigen::MatrixXcd &u, const Eigen::MatrixXcd &u_approx) {
  if (u.rows() != u.cols() || u_approx.rows() != u_approx.cols() || u.rows() != u_approx.rows()) {
    throw std::invalid_argument("approx_accuracy needs two square matrices of equal dimension");
  }
  const auto d = u.rows();
  auto identity = Eigen::MatrixXcd::Identity(d, d);
  if ((u.adjoint() * u - identity).cwiseAbs().maxCoeff() > 1e-9 ||
      (u_approx.adjoint() * u_approx - identity).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("approx_accuracy inputs must be unitary");
  }
  double overlap = std::abs((u.adjoint() * u_approx).trace());
  return std::sqrt(std::max(0.0, (static_cast<double>(d) - overlap) / static_cast<double>(d)));
}

std::vector<SweepRow> run_pulse_sweep(const SweepConfig &config) {
  if (config.sequences.empty() || config.pulse_errors.empty()) {
    throw std::invalid_argument("sweep needs at least one sequence and one pulse error");
  }
  std::vector<SweepRow> rows;
  auto emit = [&](const PulseSequence &seq, const Unitary2 &target) {
    for (double eps : config.pulse_errors) {
      NoiseModel noise;
      noise.t2_star = config.t2_star;
      noise.pulse_error = eps;
      noise.samples = config.samples;
      noise.seed = config.seed;
      noise.threads = config.threads;
      ProcessResult r = process_infidelity(seq, noise, target, config.larmor_period);
      rows.push_back({std::string(sequence_name(seq.label)), eps, config.tau, config.samples, config.seed,
                      r.infidelity});
    }
  };

  const Unitary2 identity = Unitary2::Identity();
  for (SequenceLabel label : config.sequences) {
    switch (label) {
      case SequenceLabel::k8H:
        emit(build_sequence(DecouplingKind::k8H, config.tau, config.larmor_period), identity);
        break;
      case SequenceLabel::kCP:
        emit(build_sequence(DecouplingKind::kCP, config.tau, config.larmor_period), identity);
        break;
      case SequenceLabel::kUDD:
        emit(build_sequence(DecouplingKind::kUDD, config.tau, config.larmor_period), identity);
        break;
      case SequenceLabel::kBB1:
        emit(bb1_virtual_gate(config.bb1_theta, config.tau, config.larmor_period),
             rotation({1.0, 0.0, 0.0}, config.bb1_theta));
        break;
      case SequenceLabel::kFree:
        emit(free_evolution(8.0 * config.tau), identity);
        break;
      case SequenceLabel::kCustom:
        throw std::invalid_argument("custom sequences cannot be swept by name");
    }
  }
  if (config.baseline) emit(free_evolution(8.0 * config.tau), identity);
  return rows;
}

}  // namespace qparch
