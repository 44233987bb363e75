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
#include "cli.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <set>
#include <fstream>
#include <sstream>

#include "orlicz/harness.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/spec_language.hpp"

using namespace orlicz;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "orlicz-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "orlicz_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("numbers round-trip through the JSON output") {
  const auto r = cli({"conjugate", "--phi", "power:3", "--points", "0.1,1,7.5"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  const YoungFunction conj = complementary(parse_phi("power:3"));
  const double pts[] = {0.1, 1, 7.5};
  for (int i = 0; i < 3; ++i) CHECK(j["points"][i]["value"].get<double>() == conj(pts[i]));

  const auto n = cli({"norm", "--phi", "power:2", "--f", "exp:1,1", "--tau", "inf"});
  REQUIRE(n.code == 0);
  const double direct = luxemburg_norm(parse_function("exp:1,1", kInf), make_power(2)).value;
  CHECK(Json::parse(n.out)["value"].get<double>() == direct);
  CHECK(Json::parse(n.out)["tau"] == "inf");
}

TEST_CASE("csv output") {
  const auto r = cli({"conjugate", "--phi", "power:2", "--points", "1,2,4", "--format", "csv"});
  CHECK(r.out == "s,value\n1,0.25\n2,1\n4,4\n");
  const auto v = cli({"verify", "--suite", "engel", "--format", "csv"});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("suite,id,anchor,value,slack,verdict\n", 0) == 0);
}

TEST_CASE("atomic output file") {
  const fs::path dir = scratch_dir();
  const fs::path target = dir / "conj.json";
  fs::remove(target);
  const auto r = cli({"conjugate", "--phi", "power:2", "--points", "2", "--out", target.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(Json::parse(slurp(target))["points"][0]["value"].get<double>() == 1.0);
  for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().string().find(".tmp.") == std::string::npos);

  // A failing parse leaves an existing file alone.
  const auto bad = cli({"conjugate", "--phi", "pow:2", "--out", target.string()});
  CHECK(bad.code == 2);
  CHECK(Json::parse(slurp(target))["points"][0]["value"].get<double>() == 1.0);
}

TEST_CASE("config file fills unset flags only") {
  const fs::path cfg = scratch_dir() / "weiss.cfg";
  {
    std::ofstream os(cfg);
    os << "# canonical system\nphi = power:2\nsystem = diag:rule=-n,N=50,r=2\nweight = exp-norm\nformat = json\n";
  }
  const auto from_file = cli({"weiss", "--config", cfg.string()});
  REQUIRE(from_file.code == 0);
  CHECK(Json::parse(from_file.out)["weight"] == "exp-norm");
  const auto overridden = cli({"weiss", "--config", cfg.string(), "--weight", "conjugate-inverse"});
  REQUIRE(overridden.code == 0);
  const Json j = Json::parse(overridden.out);
  CHECK(j["weight"] == "inverse-conjugate");
  CHECK(j["sup"].get<double>() == doctest::Approx(1.0).epsilon(1e-3));

  {
    std::ofstream os(cfg);
    os << "suite = young-inequalities\nphi = power:2\nphi = classp:2,3,min1\n";
  }
  const auto listed = cli({"verify", "--config", cfg.string()});
  REQUIRE(listed.code == 0);
  std::set<std::string> phis;
  const Json report = Json::parse(listed.out);
  for (const auto& c : report[0]["checks"]) phis.insert(c["inputs"]["phi"].get<std::string>());
  CHECK(phis == std::set<std::string>{"power:2", "classp:2,3,min1"});

  {
    std::ofstream os(cfg);
    os << "points = 1\n";
  }
  CHECK(cli({"weiss", "--config", cfg.string()}).code == 2);
  {
    std::ofstream os(cfg);
    os << "no equals sign\n";
  }
  CHECK(cli({"weiss", "--config", cfg.string()}).code == 2);
}

TEST_CASE("seed is accepted before or after the subcommand") {
  const auto a = cli({"--seed", "9", "verify", "--suite", "engel"});
  const auto b = cli({"verify", "--suite", "engel", "--seed", "9"});
  REQUIRE(a.code == 0);
  Json ja = Json::parse(a.out), jb = Json::parse(b.out);
  for (auto* j : {&ja, &jb}) (*j)[0].erase("runtime_ms");
  CHECK(ja == jb);
  CHECK(ja[0]["seed"] == 9);
}

TEST_CASE("admissibility horizon default and explicit value") {
  // One mode, lambda = -1, c = 1: the output norm on (0, tau) is
  // sqrt((1 - e^{-2 tau}) / 2).
  const auto finite = cli({"admissibility", "--phi", "power:2", "--system", "diag:rule=-n,N=1,r=2", "--tau", "1",
                           "--random", "0"});
  REQUIRE(finite.code == 0);
  const Json jf = Json::parse(finite.out);
  CHECK(jf["tau"].get<double>() == 1.0);
  const double expect = std::sqrt((1 - std::exp(-2.0)) / 2);
  CHECK(std::abs(jf["constant_lower"].get<double>() / expect - 1) <= 1e-8);

  const auto infinite =
      cli({"admissibility", "--phi", "power:2", "--system", "diag:rule=-n,N=1,r=2", "--random", "0"});
  REQUIRE(infinite.code == 0);
  const Json ji = Json::parse(infinite.out);
  CHECK(ji["tau"] == "inf");
  CHECK(std::abs(ji["constant_lower"].get<double>() * std::sqrt(2.0) - 1) <= 1e-8);
}
