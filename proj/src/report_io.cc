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


#include "qparch/report_io.h"

#include <fmt/format.h>

#include <stdexcept>

namespace qparch {

namespace {

using nlohmann::json;

json optional_number(const std::optional<double> &x) { return x ? json(*x) : json(nullptr); }

std::string optional_cell(const std::optional<double> &x) { return x ? format_number(*x) : std::string(); }

}  // namespace

std::string format_number(double x) { return fmt::format("{}", x); }

json report_to_json(const ResourceReport &r) {
  json out = json::object();
  out["workload"] = r.workload;
  out["code_distance"] = r.code_distance;
  out["logical_error_rate"] = r.logical_error_rate;
  out["app_qubits"] = r.app_qubits;
  out["distillation_qubits"] = r.distillation_qubits;
  out["total_logical_qubits"] = r.total_logical_qubits;
  out["logical_cycles"] = r.logical_cycles;
  out["toffoli_depth"] = r.toffoli_depth;
  out["virtual_qubits"] = r.virtual_qubits;
  out["chip_area_cm2"] = r.chip_area_cm2;
  out["runtime_seconds"] = r.runtime_seconds;
  out["runtime_days"] = r.runtime_seconds / kSecondsPerDay;
  out["production_rate"] = optional_number(r.production_rate);
  out["consumption_rate"] = optional_number(r.consumption_rate);
  out["throttle_factor"] = r.throttle_factor;
  out["failure_probability"] = r.failure_probability;
  out["depth_units"] = "logical_cycles";
  if (!r.operators.empty()) {
    json ops = json::array();
    for (const auto &op : r.operators) {
      ops.push_back({{"operator", op.name}, {"memory_qubits", op.memory_qubits}, {"depth_cycles", op.depth_cycles}});
    }
    out["operators"] = std::move(ops);
  }
  return out;
}

json code_point_to_json(const HardwareProfile &profile, const CodePoint &code) {
  LogicalGateTimes t = logical_gate_times(profile, code.distance);
  return {
      {"distance", code.distance},
      {"logical_error_rate", code.logical_error_rate},
      {"virtual_per_logical", code.virtual_per_logical},
      {"cnot_lattice_steps", code.cnot_lattice_steps},
      {"hadamard_lattice_steps", code.hadamard_lattice_steps},
      {"cnot_time_s", t.cnot},
      {"hadamard_time_s", t.hadamard},
      {"measurement_time_s", t.measurement},
  };
}

json pulse_rows_to_json(const std::vector<SweepRow> &rows) {
  json out = json::array();
  for (const auto &r : rows) {
    out.push_back({{"sequence", r.sequence},
                   {"pulse_error", r.pulse_error},
                   {"tau_s", r.tau},
                   {"samples", r.samples},
                   {"seed", r.seed},
                   {"infidelity", r.infidelity}});
  }
  return out;
}

std::string shor_rows_to_csv(const std::vector<int64_t> &bits, const std::vector<ResourceReport> &reports) {
  if (bits.size() != reports.size()) throw std::invalid_argument("one bit size per report expected");
  std::string out(kShorSweepCsvHeader);
  out += '\n';
  for (size_t i = 0; i < reports.size(); ++i) {
    const auto &r = reports[i];
    out += fmt::format("{},{},{},{},{},{},{},{}\n", bits[i], r.app_qubits, r.distillation_qubits,
                       optional_cell(r.production_rate), optional_cell(r.consumption_rate),
                       format_number(r.throttle_factor), format_number(r.toffoli_depth),
                       format_number(r.runtime_seconds));
  }
  return out;
}

std::string pulse_rows_to_csv(const std::vector<SweepRow> &rows) {
  std::string out(kPulseSweepCsvHeader);
  out += '\n';
  for (const auto &r : rows) {
    out += fmt::format("{},{},{},{},{},{}\n", r.sequence, format_number(r.pulse_error), format_number(r.tau),
                       r.samples, r.seed, format_number(r.infidelity));
  }
  return out;
}

}  // namespace qparch
