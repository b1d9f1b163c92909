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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../oracles.h"
#include "qparch/apps.h"
#include "qparch/distillation.h"
#include "qparch/pauli_frame.h"
#include "qparch/pulse_sim.h"
#include "qparch/qec_model.h"

using namespace qparch;

namespace {

constexpr double kLarmor = 40e-12;
constexpr double kTau = 1e-9;

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string &what) {
    if (!cond) {
      ok = false;
      notes.push_back("FAILED " + what);
    }
  }
  void within_rel(double got, double want, double tol, const std::string &what) {
    expect(std::abs(got - want) <= tol * std::abs(want), fmt::format("{}: {} vs {} (rel tol {})", what, got, want, tol));
  }
  void within_abs(double got, double want, double tol, const std::string &what) {
    expect(std::abs(got - want) <= tol, fmt::format("{}: {} vs {} (abs tol {})", what, got, want, tol));
  }
};

CodePoint paper_code() { return code_point(HardwareProfile{}, 31); }

Check eq2_reproduction() {
  Check c;
  c.within_rel(logical_error_rate(HardwareProfile{}, 31), 2.6e-20, 0.05, "eps_L at d=31");
  return c;
}

Check factory_tables() {
  Check c;
  const std::array<int64_t, 6> bits = {512, 1024, 2048, 4096, 8192, 16384};
  const std::array<double, 6> production = {84.1, 81.5, 76.1, 65.5, 44.1, 1.5};
  const std::array<double, 6> consumption = {32.1, 57.8, 105.1, 192.7, 355.7, 660.6};
  for (size_t i = 0; i < bits.size(); ++i) {
    ShorWorkload w;
    w.bits = bits[i];
    w.machine_logical_qubits = 100000;
    ResourceReport r = shor_estimate(w, HardwareProfile{}, paper_code());
    c.expect(r.distillation_qubits == 100000 - 6 * bits[i], fmt::format("cross-section N={}", bits[i]));
    c.within_abs(*r.production_rate, production[i], 0.1, fmt::format("production N={}", bits[i]));
    c.within_abs(*r.consumption_rate, consumption[i], 0.1, fmt::format("consumption N={}", bits[i]));
  }
  return c;
}

Check shor_1024() {
  Check c;
  ShorWorkload w;
  ResourceReport r = shor_estimate(w, HardwareProfile{}, paper_code());
  c.expect(r.app_qubits == 6144, "app qubits 6144");
  c.within_rel(static_cast<double>(r.distillation_qubits), 66564, 0.001, "distillation qubits");
  c.within_rel(static_cast<double>(r.total_logical_qubits), 72708, 0.001, "Q");
  c.within_rel(r.toffoli_depth, 1.68e8, 0.01, "Toffoli depth");
  c.within_rel(r.logical_cycles, 5.21e9, 0.01, "logical cycles");
  c.within_rel(static_cast<double>(r.virtual_qubits), 4.54e8, 0.005, "virtual qubits");
  c.within_rel(r.chip_area_cm2, 4.54, 0.005, "area cm^2");
  c.within_rel(r.runtime_seconds / kSecondsPerDay, 1.81, 0.02, "runtime days");
  return c;
}

Check sim_alanine() {
  Check c;
  SimWorkload w;
  w.particles = 61;
  ResourceReport r = sim_estimate(w, HardwareProfile{}, paper_code());
  c.within_rel(static_cast<double>(r.app_qubits), 6650, 0.01, "app qubits");
  c.expect(r.distillation_qubits == 15860, "distillation qubits 15860");
  c.within_rel(r.logical_cycles, 3.94e10, 0.01, "logical cycles");
  c.within_rel(r.toffoli_depth, 1.27e9, 0.01, "Toffoli depth");
  c.within_rel(static_cast<double>(r.virtual_qubits), 1.40e8, 0.01, "virtual qubits");
  c.within_rel(r.runtime_seconds / kSecondsPerDay, 13.7, 0.02, "runtime days");
  return c;
}

Check throttling() {
  Check c;
  for (int64_t n : {512, 1024, 2048, 4096, 8192, 16384}) {
    ShorWorkload w;
    w.bits = n;
    w.machine_logical_qubits = 100000;
    double t = shor_estimate(w, HardwareProfile{}, paper_code()).throttle_factor;
    if (n <= 1024) {
      c.expect(t == 1.0, fmt::format("throttle 1 at N={} (got {})", n, t));
    } else {
      c.expect(t > 1.0, fmt::format("throttle > 1 at N={} (got {})", n, t));
    }
    if (n == 4096) c.expect(t >= 2.8 && t <= 3.1, fmt::format("throttle at 4096 in [2.8, 3.1] (got {})", t));
  }
  return c;
}

Check toffoli_time_check() {
  Check c;
  double t = toffoli_time(HardwareProfile{});
  c.within_rel(t, 930e-6, 1e-12, "Toffoli time");
  return c;
}

Check frame_oracle() {
  Check c;
  const Pauli letters[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  const GateKind singles[] = {GateKind::kH, GateKind::kS, GateKind::kSdg, GateKind::kX, GateKind::kY, GateKind::kZ};
  int cases = 0;
  for (GateKind g : singles) {
    Eigen::Matrix2cd u = oracle::single_gate(g);
    for (Pauli p : letters) {
      auto want = oracle::match_pauli_string(u * oracle::pauli(p) * u.adjoint(), 1);
      PauliFrame f(1);
      f.set(0, p);
      f.conjugate(CliffordGate::single(g, 0));
      c.expect(want && f[0] == (*want)[0], fmt::format("{} on {}", gate_name(g), pauli_char(p)));
      ++cases;
    }
  }
  for (int control = 0; control < 2; ++control) {
    Eigen::Matrix4cd u = oracle::cnot(control, 1 - control);
    for (Pauli a : letters) {
      for (Pauli b : letters) {
        auto want = oracle::match_pauli_string(u * oracle::pauli_string({a, b}) * u.adjoint(), 2);
        PauliFrame f(2);
        f.set(0, a);
        f.set(1, b);
        f.conjugate(CliffordGate::cnot(control, 1 - control));
        c.expect(want && f[0] == (*want)[0] && f[1] == (*want)[1],
                 fmt::format("CNOT({}->{}) on {}{}", control, 1 - control, pauli_char(a), pauli_char(b)));
        ++cases;
      }
    }
  }
  for (Pauli p : letters) {
    for (Pauli basis : {Pauli::X, Pauli::Y, Pauli::Z}) {
      for (int raw : {1, -1}) {
        PauliFrame f(1);
        f.set(0, p);
        int want = oracle::anticommute_by_matrix(p, basis) ? -raw : raw;
        c.expect(f.measure(basis, 0, raw) == want, fmt::format("measure {} in {}", pauli_char(p), pauli_char(basis)));
        ++cases;
      }
    }
  }
  c.notes.push_back(fmt::format("{} cases", cases));
  return c;
}

double mc_infidelity(const PulseSequence &seq, double eps, int64_t samples, const Unitary2 &target,
                     double t2_star = 2e-9) {
  NoiseModel n;
  n.t2_star = t2_star;
  n.pulse_error = eps;
  n.samples = samples;
  n.seed = 2026;
  return process_infidelity(seq, n, target, kLarmor).infidelity;
}

Check pulse_properties() {
  Check c;
  const double inf = std::numeric_limits<double>::infinity();
  const Unitary2 id = Unitary2::Identity();
  const std::array<std::pair<const char *, DecouplingKind>, 3> kinds = {
      {{"8H", DecouplingKind::k8H}, {"CP", DecouplingKind::kCP}, {"UDD", DecouplingKind::kUDD}}};

  // (a)
  for (double theta : {0.0, M_PI / 2, M_PI, 2.5}) {
    Unitary2 target = rotation({1, 0, 0}, theta);
    double x = mc_infidelity(composite_x_gate(theta, kLarmor), 0.0, 1, target, inf);
    double bb1 = mc_infidelity(bb1_virtual_gate(theta, kTau, kLarmor), 0.0, 1, target, inf);
    c.expect(x < 1e-9, fmt::format("(a) composite X({}) noiseless {}", theta, x));
    c.expect(bb1 < 1e-9, fmt::format("(a) BB1({}) noiseless {}", theta, bb1));
  }
  for (const auto &[name, kind] : kinds) {
    double v = mc_infidelity(build_sequence(kind, kTau, kLarmor), 0.0, 1, id, inf);
    c.expect(v < 1e-9, fmt::format("(a) {} noiseless {}", name, v));
  }

  // (b)
  constexpr int64_t kSamples = 20000;
  double free = mc_infidelity(free_evolution(8 * kTau), 0.0, kSamples, id);
  for (const auto &[name, kind] : kinds) {
    double v = mc_infidelity(build_sequence(kind, kTau, kLarmor), 0.0, kSamples, id);
    c.expect(10 * v <= free, fmt::format("(b) {} {} vs free {}", name, v, free));
    c.notes.push_back(fmt::format("{} {:.3g} vs free {:.3g}", name, v, free));
  }

  // (c)
  const double grid[] = {0.0, 0.0025, 0.005, 0.01, 0.02};
  for (const auto &[name, kind] : kinds) {
    PulseSequence seq = build_sequence(kind, kTau, kLarmor);
    double last = -1;
    for (double eps : grid) {
      double v = mc_infidelity(seq, eps, kSamples, id);
      c.expect(v >= last, fmt::format("(c) {} monotone at eps={}: {} < {}", name, eps, v, last));
      last = v;
    }
  }

  // (d)
  double h8 = mc_infidelity(build_sequence(DecouplingKind::k8H, kTau, kLarmor), 0.01, kSamples, id);
  c.expect(h8 >= 1e-4 && h8 <= 1e-2, fmt::format("(d) 8H at 1% pulse error {}", h8));
  c.notes.push_back(fmt::format("8H@1% {:.3g}", h8));

  // (e)
  Unitary2 x_pi = rotation({1, 0, 0}, M_PI);
  double bb1 = mc_infidelity(bb1_virtual_gate(M_PI, kTau, kLarmor), 0.01, 1, x_pi, inf);
  double single = mc_infidelity(composite_x_gate(M_PI, kLarmor), 0.01, 1, x_pi, inf);
  c.expect(single > bb1, fmt::format("(e) single X {} > BB1 {}", single, bb1));
  c.notes.push_back(fmt::format("BB1 {:.3g} vs X {:.3g}", bb1, single));
  double lo = mc_infidelity(bb1_virtual_gate(M_PI, kTau, kLarmor), 1e-3, 1, x_pi, inf);
  double slope = std::log10(bb1 / lo);
  c.expect(slope >= 3.5, fmt::format("(e) BB1 log-log slope {}", slope));
  return c;
}

std::string run_binary(const std::string &args) {
  std::string cmd = std::string(QPARCH_BINARY) + " " + args + " 2>&1";
  std::string out;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return out + fmt::format("\n<exit {}>", status);
}

Check determinism() {
  Check c;
  auto circuit = std::filesystem::temp_directory_path() / "qparch_acceptance_circuit.jsonl";
  std::ofstream(circuit) << "{\"op\":\"pauli\",\"p\":\"X\",\"q\":0}\n"
                            "{\"op\":\"clifford\",\"g\":\"CNOT\",\"q\":[0,1]}\n"
                            "{\"op\":\"measure\",\"basis\":\"Z\",\"q\":1,\"raw\":1}\n";
  const std::vector<std::string> invocations = {
      "qec distance --target-logical-error 8.6e-19",
      "qec distance --distance 31 --format csv",
      "estimate shor --bits 1024",
      "estimate shor --sweep 512,1024,2048,4096,8192,16384 --machine-logical-qubits 100000 --format csv",
      "estimate sim --particles 61",
      "pulse sweep --sequences 8h,cp,udd,bb1 --pulse-errors 0,0.005,0.01 --tau 1e-9 --samples 2000 --seed 7 "
      "--baseline",
      "frame exec --circuit " + circuit.string(),
  };
  for (const auto &args : invocations) {
    std::string a = run_binary(args), b = run_binary(args);
    c.expect(a == b, "byte-identical: qparch " + args);
    c.expect(a.find("<exit 0>") != std::string::npos, "exit 0: qparch " + args);
  }
  return c;
}

Check round_trips() {
  Check c;
  HardwareProfile p;
  for (int d = 1; d <= 61; d += 2) {
    int got = min_code_distance(p, logical_error_rate(p, d)).distance;
    c.expect(got == d, fmt::format("distance round trip d={} got {}", d, got));
  }
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> log_c(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    double consumption = std::pow(10.0, log_c(rng));
    int64_t area = required_factory_area(consumption, 2);
    c.expect(factory_rate(static_cast<double>(area), 2) >= consumption,
             fmt::format("factory round trip c={}", consumption));
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"1 logical error rate at d=31", eq2_reproduction},
      {"2 factory production and consumption table", factory_tables},
      {"3 Shor 1024-bit resource summary", shor_1024},
      {"4 alanine simulation resource summary", sim_alanine},
      {"5 throttling on a 1e5-qubit machine", throttling},
      {"6 Toffoli time 930 us", toffoli_time_check},
      {"7 Pauli-frame oracle equivalence", frame_oracle},
      {"8 pulse-level properties", pulse_properties},
      {"9 CLI determinism", determinism},
      {"10 round trips", round_trips},
  };
  int failures = 0;
  for (const auto &[name, fn] : criteria) {
    Check c;
    try {
      c = fn();
    } catch (const std::exception &e) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    std::string detail;
    for (const auto &n : c.notes) detail += (detail.empty() ? "" : "; ") + n;
    fmt::print("{} [{}]{}{}\n", c.ok ? "PASS" : "FAIL", name, detail.empty() ? "" : " ", detail);
    failures += c.ok ? 0 : 1;
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
