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


#ifndef QPARCH_REPORT_IO_H_
#define QPARCH_REPORT_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qparch/apps.h"
#include "qparch/pulse_sim.h"
#include "qparch/qec_model.h"

namespace qparch {

inline constexpr std::string_view kShorSweepCsvHeader =
    "N,app_qubits,distillation_qubits,production_rate,consumption_rate,throttle,toffoli_depth,runtime_s";
inline constexpr std::string_view kPulseSweepCsvHeader = "sequence,pulse_error,tau_s,samples,seed,infidelity";

/// Shortest text that reads back to the same double.
std::string format_number(double x);

nlohmann::json report_to_json(const ResourceReport &report);
nlohmann::json code_point_to_json(const HardwareProfile &profile, const CodePoint &code);
nlohmann::json pulse_rows_to_json(const std::vector<SweepRow> &rows);

/// Header line plus one line per report. Missing rates are empty cells.
std::string shor_rows_to_csv(const std::vector<int64_t> &bits, const std::vector<ResourceReport> &reports);
std::string pulse_rows_to_csv(const std::vector<SweepRow> &rows);

}  // namespace qparch

#endif  // QPARCH_REPORT_IO_H_
