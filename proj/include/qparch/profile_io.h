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

#ifndef QPARCH_PROFILE_IO_H_
#define QPARCH_PROFILE_IO_H_

#include <filesystem>
#include <string_view>

#include "json.hpp"
#include "qparch/qec_model.h"

namespace qparch {

// JSON keys match the HardwareProfile member names. Missing keys keep their
// defaults; unknown keys throw ParseError.
HardwareProfile profile_from_json(const nlohmann::json &doc);
HardwareProfile parse_profile(std::string_view text);
HardwareProfile load_profile(const std::filesystem::path &path);

nlohmann::json profile_to_json(const HardwareProfile &profile);

}  // namespace qparch

#endif  // QPARCH_PROFILE_IO_H_
