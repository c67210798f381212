// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MTV_CLI_HPP_
#define MTV_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "mtv/io.hpp"

namespace mtv::cli {

// Outcomes of a run and their exit codes.
enum class Outcome {
  kVerified,                // 0
  kWitnessFound,            // 0
  kFalsificationCandidate,  // 1
  kHypothesisViolated,      // 1
  kResourceLimit,           // 3
  kInputError,              // 2
};

const char* outcome_name(Outcome o);
int exit_code(Outcome o);

struct RunReport {
  std::string command;
  std::string inputs_digest;
  Json parameters = Json::object();
  Outcome outcome = Outcome::kVerified;
  Json payload = Json::object();
  double wall_time_s = -1;  // emitted only when >= 0
};

Json to_json(const RunReport& report);
// Aligned "key  value" lines; nested values as compact JSON.
std::string to_text(const RunReport& report);

// Runs one command line (args excludes the program name), writes the report
// to `out` and diagnostics to `err`, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtv::cli

#endif  // MTV_CLI_HPP_
