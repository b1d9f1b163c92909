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


#include "qparch/cli.h"

#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qparch/apps.h"
#include "qparch/circuit_io.h"
#include "qparch/errors.h"
#include "qparch/profile_io.h"
#include "qparch/pulse_sim.h"
#include "qparch/qec_model.h"
#include "qparch/report_io.h"

namespace qparch {

namespace {

using nlohmann::json;

// Budget the published factoring machine was designed for.
constexpr double kDefaultDepth = 1.6e11;
constexpr double kDefaultQubits = 72708;

struct GlobalOptions {
  std::string profile_path;
  std::string output_path;
  std::string format;
};

struct QecOptions {
  std::optional<double> target_logical_error;
  std::optional<double> error_per_gate;
  std::optional<int> distance;
  double logical_depth = kDefaultDepth;
  double logical_qubits = kDefaultQubits;
  double target_failure = 1e-2;
};

struct ShorOptions {
  int64_t bits = 1024;
  std::optional<int64_t> machine;
  int level = 2;
  std::vector<int64_t> sweep;
  std::optional<int> distance;
};

struct SimOptions {
  int64_t particles = 61;
  int64_t timesteps = 1024;
  int bits_precision = 12;
  std::optional<int> distance;
};

struct PulseOptions {
  std::vector<std::string> sequences = {"8h", "cp", "udd"};
  std::vector<double> pulse_errors = {0.0};
  double tau = 1e-9;
  int64_t samples = 20000;
  uint64_t seed = 0;
  double t2_star = 2e-9;
  double bb1_theta = std::numbers::pi;
  bool baseline = false;
  unsigned threads = 0;
};

HardwareProfile resolve_profile(const GlobalOptions &g) {
  std::string path = g.profile_path;
  if (path.empty()) {
    if (const char *env = std::getenv("QPARCH_PROFILE"); env != nullptr) path = env;
  }
  return path.empty() ? HardwareProfile{} : load_profile(path);
}

std::string resolve_format(const GlobalOptions &g, const char *fallback) {
  return g.format.empty() ? fallback : g.format;
}

void emit(const GlobalOptions &g, std::ostream &out, const std::string &text) {
  if (g.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.output_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file " + g.output_path);
  file << text;
  if (!file) throw std::runtime_error("failed to write " + g.output_path);
}

std::string dump(const json &doc) { return doc.dump(2) + "\n"; }

CodePoint report_code(const HardwareProfile &profile, std::optional<int> distance) {
  return code_point(profile, distance.value_or(profile.code_distance));
}

std::string cmd_qec_distance(const GlobalOptions &g, const QecOptions &o) {
  HardwareProfile profile = resolve_profile(g);
  if (o.error_per_gate) {
    profile.error_per_virtual_gate = *o.error_per_gate;
    profile.validate();
  }
  json doc = json::object();
  std::vector<std::pair<std::string, CodePoint>> rows;
  if (o.distance) {
    rows.emplace_back("requested", code_point(profile, *o.distance));
  } else {
    double target = 0.0;
    if (o.target_logical_error) {
      target = *o.target_logical_error;
    } else {
      AlgorithmDemand demand;
      demand.circuit_depth = o.logical_depth;
      demand.logical_qubits = o.logical_qubits;
      demand.target_failure = o.target_failure;
      target = target_logical_error(demand);
    }
    doc["target_logical_error"] = target;
    rows.emplace_back("minimal", min_code_distance(profile, target));
    rows.emplace_back("profile_override", code_point(profile, profile.code_distance));
  }

  if (resolve_format(g, "json") == "csv") {
    std::string text = "role,distance,logical_error_rate,virtual_per_logical,cnot_time_s,hadamard_time_s,measurement_time_s\n";
    for (const auto &[role, cp] : rows) {
      LogicalGateTimes t = logical_gate_times(profile, cp.distance);
      text += fmt::format("{},{},{},{},{},{},{}\n", role, cp.distance, format_number(cp.logical_error_rate),
                          cp.virtual_per_logical, format_number(t.cnot), format_number(t.hadamard),
                          format_number(t.measurement));
    }
    return text;
  }
  for (const auto &[role, cp] : rows) doc[role] = code_point_to_json(profile, cp);
  return dump(doc);
}

std::string cmd_estimate_shor(const GlobalOptions &g, const ShorOptions &o) {
  HardwareProfile profile = resolve_profile(g);
  CodePoint code = report_code(profile, o.distance);
  std::string format = resolve_format(g, "json");
  if (!o.sweep.empty()) {
    ShorSweep sweep = shor_sweep(o.sweep, o.machine, profile, code, o.level);
    if (format == "csv") return shor_rows_to_csv(sweep.bits, o.machine ? sweep.constrained : sweep.unconstrained);
    json doc = json::object();
    auto rows = [&](const std::vector<ResourceReport> &reports) {
      json arr = json::array();
      for (size_t i = 0; i < reports.size(); ++i) {
        json row = report_to_json(reports[i]);
        row["bits"] = sweep.bits[i];
        arr.push_back(std::move(row));
      }
      return arr;
    };
    doc["unconstrained"] = rows(sweep.unconstrained);
    if (o.machine) {
      doc["machine_logical_qubits"] = *o.machine;
      doc["constrained"] = rows(sweep.constrained);
    }
    return dump(doc);
  }
  ShorWorkload w;
  w.bits = o.bits;
  w.machine_logical_qubits = o.machine;
  ResourceReport r = shor_estimate(w, profile, code, o.level);
  if (format == "csv") return shor_rows_to_csv({o.bits}, {r});
  json doc = report_to_json(r);
  doc["bits"] = o.bits;
  if (o.machine) doc["machine_logical_qubits"] = *o.machine;
  return dump(doc);
}

std::string cmd_estimate_sim(const GlobalOptions &g, const SimOptions &o) {
  HardwareProfile profile = resolve_profile(g);
  SimWorkload w;
  w.particles = o.particles;
  w.timesteps = o.timesteps;
  w.bits_precision = o.bits_precision;
  ResourceReport r = sim_estimate(w, profile, report_code(profile, o.distance));
  if (resolve_format(g, "json") == "csv") return shor_rows_to_csv({o.particles}, {r});
  json doc = report_to_json(r);
  doc["particles"] = o.particles;
  doc["timesteps"] = o.timesteps;
  return dump(doc);
}

std::string cmd_pulse_sweep(const GlobalOptions &g, const PulseOptions &o) {
  HardwareProfile profile = resolve_profile(g);
  SweepConfig config;
  for (const auto &name : o.sequences) {
    auto label = sequence_from_name(name);
    if (!label || *label == SequenceLabel::kCustom) throw std::invalid_argument("unknown sequence '" + name + "'");
    config.sequences.push_back(*label);
  }
  config.pulse_errors = o.pulse_errors;
  config.tau = o.tau;
  config.samples = o.samples;
  config.seed = o.seed;
  config.t2_star = o.t2_star;
  config.larmor_period = profile.larmor_period;
  config.bb1_theta = o.bb1_theta;
  config.baseline = o.baseline;
  config.threads = o.threads;
  std::vector<SweepRow> rows = run_pulse_sweep(config);
  if (resolve_format(g, "csv") == "json") return dump(pulse_rows_to_json(rows));
  return pulse_rows_to_csv(rows);
}

std::string cmd_frame_exec(const GlobalOptions &g, const std::string &circuit_path) {
  if (resolve_format(g, "json") != "json") throw std::invalid_argument("frame exec only writes json");
  std::ifstream in(circuit_path);
  if (!in) throw std::invalid_argument("cannot open circuit " + circuit_path);
  CircuitFile file = parse_circuit(in);
  CircuitResult result = run_circuit(PauliFrame(file.num_qubits), file.instructions, file.raw_outcomes);
  return dump(circuit_result_to_json(result));
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Resource estimator and control-layer simulator for a layered quantum computer", "qparch"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--profile", g.profile_path, "Hardware profile JSON (default: $QPARCH_PROFILE or built-in)");
  app.add_option("--output,-o", g.output_path, "Write the report to this file");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto *qec = app.add_subcommand("qec", "Surface-code sizing")->require_subcommand(1);
  QecOptions qo;
  auto *qec_distance = qec->add_subcommand("distance", "Code distance for a target logical error");
  qec_distance->add_option("--target-logical-error", qo.target_logical_error, "Per-gate logical error target");
  qec_distance->add_option("--error-per-gate", qo.error_per_gate, "Override the virtual-gate error rate");
  qec_distance->add_option("--distance", qo.distance, "Report a fixed code distance");
  qec_distance->add_option("--logical-depth", qo.logical_depth, "Algorithm depth K in logical cycles");
  qec_distance->add_option("--logical-qubits", qo.logical_qubits, "Logical qubit count Q");
  qec_distance->add_option("--target-failure", qo.target_failure, "Acceptable algorithm failure probability");

  auto *estimate = app.add_subcommand("estimate", "Application resource budgets")->require_subcommand(1);
  ShorOptions so;
  auto *shor = estimate->add_subcommand("shor", "Shor's factoring algorithm");
  shor->add_option("--bits", so.bits, "Modulus size N");
  shor->add_option("--machine-logical-qubits", so.machine, "Fixed machine size M in logical qubits");
  shor->add_option("--distillation-level", so.level, "Distillation levels");
  shor->add_option("--sweep", so.sweep, "Comma-separated modulus sizes")->delimiter(',');
  shor->add_option("--distance", so.distance, "Code distance (default: profile)");
  SimOptions mo;
  auto *sim = estimate->add_subcommand("sim", "First-quantized molecular simulation");
  sim->add_option("--particles", mo.particles, "Particle count B");
  sim->add_option("--timesteps", mo.timesteps, "Time steps");
  sim->add_option("--bits-precision", mo.bits_precision, "Spatial precision per dimension");
  sim->add_option("--distance", mo.distance, "Code distance (default: profile)");

  auto *pulse = app.add_subcommand("pulse", "Pulse-level simulation")->require_subcommand(1);
  PulseOptions po;
  auto *sweep = pulse->add_subcommand("sweep", "Infidelity over sequences and pulse errors");
  sweep->add_option("--sequences", po.sequences, "Comma-separated: 8h, cp, udd, bb1, free")->delimiter(',');
  sweep->add_option("--pulse-errors", po.pulse_errors, "Comma-separated relative pulse errors")->delimiter(',');
  sweep->add_option("--tau", po.tau, "Decoupling spacing in seconds");
  sweep->add_option("--samples", po.samples, "Monte-Carlo samples per point");
  sweep->add_option("--seed", po.seed, "Random seed");
  sweep->add_option("--t2-star", po.t2_star, "Ensemble dephasing time in seconds");
  sweep->add_option("--bb1-theta", po.bb1_theta, "Target X rotation of the BB1 gate");
  sweep->add_option("--threads", po.threads, "Worker threads (0 = all cores)");
  sweep->add_flag("--baseline", po.baseline, "Append free-evolution rows");

  auto *frame = app.add_subcommand("frame", "Pauli-frame tracking")->require_subcommand(1);
  std::string circuit_path;
  auto *exec = frame->add_subcommand("exec", "Run a JSON-lines circuit through the frame");
  exec->add_option("--circuit", circuit_path, "Circuit file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::string text;
    if (*qec_distance) {
      text = cmd_qec_distance(g, qo);
    } else if (*shor) {
      text = cmd_estimate_shor(g, so);
    } else if (*sim) {
      text = cmd_estimate_sim(g, mo);
    } else if (*sweep) {
      text = cmd_pulse_sweep(g, po);
    } else {
      text = cmd_frame_exec(g, circuit_path);
    }
    emit(g, out, text);
    return kExitOk;
  } catch (const InfeasibleError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qparch
