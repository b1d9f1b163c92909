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

#include "qparch/profile_io.h"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "qparch/errors.h"

namespace qparch {

namespace {

using nlohmann::json;

struct DoubleField {
  const char *key;
  double HardwareProfile::*member;
};

constexpr DoubleField kDoubleFields[] = {
    {"larmor_period", &HardwareProfile::larmor_period},
    {"pulse_duration", &HardwareProfile::pulse_duration},
    {"entangling_gate_time", &HardwareProfile::entangling_gate_time},
    {"qnd_readout_time", &HardwareProfile::qnd_readout_time},
    {"virtual_gate_time", &HardwareProfile::virtual_gate_time},
    {"lattice_cycle_time", &HardwareProfile::lattice_cycle_time},
    {"logical_cycle_time", &HardwareProfile::logical_cycle_time},
    {"error_per_virtual_gate", &HardwareProfile::error_per_virtual_gate},
    {"threshold", &HardwareProfile::threshold},
    {"c1", &HardwareProfile::c1},
    {"c2", &HardwareProfile::c2},
};

constexpr const char *kDistanceKey = "code_distance";

}  // namespace

HardwareProfile profile_from_json(const json &doc) {
  if (!doc.is_object()) throw ParseError("hardware profile must be a JSON object");
  HardwareProfile profile;
  for (const auto &[key, value] : doc.items()) {
    if (key == kDistanceKey) {
      if (!value.is_number_integer()) throw ParseError("code_distance must be an integer");
      profile.code_distance = value.get<int>();
      continue;
    }
    bool known = false;
    for (const auto &field : kDoubleFields) {
      if (key != field.key) continue;
      if (!value.is_number()) throw ParseError(key + " must be a number");
      profile.*field.member = value.get<double>();
      known = true;
      break;
    }
    if (!known) throw ParseError("unknown hardware profile field '" + key + "'");
  }
  profile.validate();
  return profile;
}

HardwareProfile parse_profile(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("hardware profile is not valid JSON: ") + e.what());
  }
  return profile_from_json(doc);
}

HardwareProfile load_profile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open hardware profile " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_profile(buffer.str());
}

json profile_to_json(const HardwareProfile &profile) {
  json out = json::object();
  for (const auto &field : kDoubleFields) out[field.key] = profile.*field.member;
  out[kDistanceKey] = profile.code_distance;
  return out;
}

}  // namespace qparch
