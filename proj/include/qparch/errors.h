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

#ifndef QPARCH_ERRORS_H_
#define QPARCH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qparch {

/// The inputs are well formed, but the model has no solution for them
/// (an unreachable error target, a machine with no room for factories).
/// Callers that need to tell "bad input" apart from "valid input, no answer"
/// catch this before std::invalid_argument.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string &what) : std::runtime_error(what) {}
};

/// Malformed external input (profile JSON, circuit file). Carries the 1-based
/// line number when the source is line oriented, 0 otherwise.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string &what, size_t line = 0)
      : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  size_t line() const { return line_; }

 private:
  size_t line_;
};

}  // namespace qparch

#endif  // QPARCH_ERRORS_H_
