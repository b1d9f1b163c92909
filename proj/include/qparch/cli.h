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


#ifndef QPARCH_CLI_H_
#define QPARCH_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qparch {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;

/// Runs the qparch command line. `args` excludes the program name. Reports go
/// to `out` unless --output names a file; diagnostics go to `err`.
///
///   qec distance     [--target-logical-error E | --logical-depth K ...] [--distance d]
///   estimate shor    [--bits N] [--machine-logical-qubits M] [--sweep N,N,...]
///   estimate sim     [--particles B] [--timesteps T]
///   pulse sweep      [--sequences 8h,cp,...] [--pulse-errors e,e,...] [--baseline]
///   frame exec       --circuit FILE
///
/// Global: --profile FILE (falling back to $QPARCH_PROFILE), --output FILE,
/// --format csv|json.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qparch

#endif  // QPARCH_CLI_H_
