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
#include "orlicz/harness.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "orlicz/numeric.hpp"

using namespace orlicz;

namespace {

bool anchor_known(const std::string& a) {
  const auto& all = registered_anchors();
  return std::find(all.begin(), all.end(), a) != all.end();
}

}  // namespace

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 8);
  HarnessConfig cfg;
  CHECK_THROWS_AS(run_suite("no-such-suite", cfg), ParseError);
  cfg.phis = {"pow:2"};
  CHECK_THROWS_AS(run_suite("engel", cfg), ParseError);
}

TEST_CASE("engel suite passes and is deterministic") {
  HarnessConfig cfg;
  cfg.seed = 7;
  cfg.engel_trials = 20;
  const auto a = run_suite("engel", cfg);
  const auto b = run_suite("engel", cfg);
  CHECK(a.pass);
  CHECK(a.seed == 7);
  REQUIRE(!a.checks.empty());
  for (const auto& c : a.checks) CHECK(anchor_known(c.anchor));
  CHECK(to_json(a, false).dump() == to_json(b, false).dump());
  cfg.seed = 8;
  CHECK(to_json(run_suite("engel", cfg), false).dump() != to_json(a, false).dump());
}

TEST_CASE("young suite covers every default Phi") {
  const auto rep = run_suite("young-inequalities", HarnessConfig{});
  CHECK(rep.pass);
  for (const auto& spec : default_phis()) {
    const bool seen = std::any_of(rep.checks.begin(), rep.checks.end(),
                                  [&](const CheckRecord& c) { return c.inputs.value("phi", "") == spec; });
    CHECK_MESSAGE(seen, spec);
  }
}

TEST_CASE("shift suite rejects a Delta2 Phi") {
  HarnessConfig cfg;
  cfg.phis = {"power:2"};
  CHECK_THROWS_AS(run_suite("shift-delta2", cfg), PreconditionError);
  const auto rep = run_suite("shift-delta2", HarnessConfig{});
  CHECK(rep.pass);
}

TEST_CASE("report serialisation") {
  SuiteReport rep;
  rep.suite = "demo";
  rep.seed = 3;
  rep.checks.push_back({"a,b", "anchor", {{"x", kInf}}, kInf, 0.1, true, ""});
  rep.checks.push_back({"c", "anchor", Json::object(), 0.1 + 0.2, -1, false, "note"});
  rep.pass = false;
  rep.runtime_ms = 12;
  const Json j = to_json(rep);
  CHECK(j["checks"][0]["value"].is_null());
  CHECK(j["checks"][0]["value_infinite"] == "+inf");
  CHECK(j["checks"][0]["inputs"]["x"] == "inf");
  CHECK(j["checks"][1]["value"].get<double>() == 0.1 + 0.2);
  CHECK(j["verdict"] == "fail");
  CHECK(j.contains("runtime_ms"));
  CHECK_FALSE(to_json(rep, false).contains("runtime_ms"));
  // Numbers survive a text round trip exactly.
  const Json back = Json::parse(reports_json({rep}));
  CHECK(back[0]["checks"][1]["value"].get<double>() == 0.1 + 0.2);

  const std::string csv = reports_csv({rep});
  CHECK(csv.rfind("suite,id,anchor,value,slack,verdict\n", 0) == 0);
  CHECK(csv.find("\"a,b\"") != std::string::npos);
  CHECK(csv.find(",fail\n") != std::string::npos);
}

TEST_CASE("run_all honours the suite selection") {
  HarnessConfig cfg;
  cfg.suites = std::vector<std::string>{};
  CHECK(run_all(cfg).empty());
  cfg.suites = std::vector<std::string>{"shift-delta2", "no-such-suite"};
  const auto reps = run_all(cfg);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].pass);
  CHECK_FALSE(reps[1].pass);
  CHECK(to_json(reps[1])["verdict"] == "error");
}
