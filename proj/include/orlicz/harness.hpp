// Copyright 2026 The Orlicz Toolkit Authors
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
#ifndef ORLICZ_HARNESS_HPP
#define ORLICZ_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace orlicz {

using Json = nlohmann::ordered_json;

struct CheckRecord {
  std::string id;
  std::string anchor;  // one of registered_anchors()
  Json inputs = Json::object();
  double value = 0;
  double slack = 0;  // >= 0 means the check passed with room to spare
  bool pass = true;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  bool pass = true;     // conjunction of the checks
  std::string error;    // set when the suite could not run
  double runtime_ms = 0;
};

// Suite configuration.  Empty lists select the shipped default corpus.
struct HarnessConfig {
  std::uint64_t seed = 1;
  std::vector<std::string> phis;
  std::vector<std::string> systems;
  // Suites for run_all; unset means every suite, empty means none.
  std::optional<std::vector<std::string>> suites;
  // Effort knobs for the randomised checks.
  int lp_trials = 100;
  int admissibility_random = 100;
  int engel_trials = 100;
  int operator_trials = 200;
};

const std::vector<std::string>& suite_names();
const std::vector<std::string>& registered_anchors();
std::vector<std::string> default_phis();
std::vector<std::string> default_systems();

// Throws ParseError / PreconditionError for unusable configurations.
SuiteReport run_suite(const std::string& name, const HarnessConfig& config);

// Every suite, concurrently; reports come back in suite order.  A suite that
// throws yields a failed report carrying the message.
std::vector<SuiteReport> run_all(const HarnessConfig& config);

// {suite, seed, checks: [{id, anchor, inputs, value, slack, verdict}], verdict, runtime_ms}.
// Non-finite numbers are written as null next to an "infinite" marker.
Json to_json(const SuiteReport& report, bool with_runtime = true);
std::string reports_json(const std::vector<SuiteReport>& reports, bool with_runtime = true);
std::string reports_csv(const std::vector<SuiteReport>& reports);

}  // namespace orlicz

#endif
