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
#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "orlicz/spec_language.hpp"

using namespace orlicz;

TEST_CASE("Young function specs") {
  CHECK(parse_phi("power:2")(3.0) == 9.0);
  CHECK(parse_phi(" power:1.5 ").provenance() == "power(1.5)");
  CHECK(parse_phi("expm1t")(1.0) == doctest::Approx(std::exp(1.0) - 2).epsilon(1e-15));
  CHECK(parse_phi("classp:2,4,min1").provenance() == "class-p(classp:2,4,min1)");
  CHECK(parse_phi("conjugate-of:power:2")(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(parse_phi("conjugate-of:conjugate-of:power:3")(2.0) == doctest::Approx(8.0).epsilon(1e-15));
  for (const char* bad : {"pow:2", "power:", "power:1", "power:x", "classp:2,3", "classp:2,3,min2", "classp:3,2,one",
                          "classp:2,3,min1,one", "", "conjugate-of:nope"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_phi(bad), ParseError);
  }
}

TEST_CASE("rho grammar round-trips through names") {
  for (const char* spec : {"one", "id", "min1", "log1p", "pow:0.5", "affine:1,2,one,log1p", "compose:log1p,min1",
                           "affine:0.5,0.5,compose:pow:0.25,min1,id", "compose:affine:1,1,one,id,log1p"}) {
    CAPTURE(spec);
    const auto rho = parse_rho(spec);
    CHECK(rho.name() == spec);
    CHECK(parse_rho(rho.name()).name() == rho.name());
  }
  const auto mix = parse_rho("affine:1,2,one,log1p");
  CHECK(mix(1.0) == doctest::Approx(1 + 2 * std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(parse_rho("pow:2"), ParseError);
  CHECK_THROWS_AS(parse_rho("affine:1,2,one"), ParseError);
  CHECK_THROWS_AS(parse_rho("one:3"), ParseError);
}

TEST_CASE("rule expressions") {
  CHECK(parse_rule("-n")(3) == -3);
  CHECK(parse_rule("-n^2")(3) == -9);
  CHECK(parse_rule("-log(1+n)")(std::exp(1.0) - 1) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(parse_rule("-(n+1)*2/4")(3) == -2);
  CHECK(parse_rule("-n^1.5 - 0.5")(4) == -8.5);
  CHECK(parse_rule("-1e-3*sqrt(n)")(4) == doctest::Approx(-2e-3).epsilon(1e-15));
  CHECK(parse_rule("2^-1")(0) == 0.5);
  for (const char* bad : {"", "-m", "-log n", "(n", "n)", "1..2", "foo(n)", "n +"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rule(bad), ParseError);
  }
}

TEST_CASE("function specs") {
  const auto e = parse_function("exp:1,1", kInf);
  CHECK(e.kind() == FunctionKind::exp);
  CHECK(std::isinf(e.upper()));
  CHECK(parse_function("const:1", 4).length() == 4);
  CHECK(parse_function("pow:2,-0.25", 1).norm_at(0.0625) == doctest::Approx(4.0));
  CHECK_THROWS_AS(parse_function("const:1", kInf), ParseError);
  CHECK_THROWS_AS(parse_function("exp:1", 1), ParseError);
  CHECK_THROWS_AS(parse_function("exp:1,1", -1), ParseError);
  CHECK_THROWS_AS(parse_function("sin:1", 1), ParseError);

  SUBCASE("step CSV files") {
    const std::string path = "test_spec_language_step.csv";
    {
      std::ofstream out(path);
      out << "left,right,value\n0,1,2\n1,2.5,-1\n# comment\n2.5,3,0\n";
    }
    const auto f = parse_function("file:" + path, 1.0);
    CHECK(f.breaks() == std::vector<double>{0, 1, 2.5, 3});
    CHECK(f.values() == std::vector<double>{2, -1, 0});
    {
      std::ofstream out(path);
      out << step_csv(f);
    }
    CHECK(read_step_csv(path).values() == f.values());
    {
      std::ofstream out(path);
      out << "0,1,2\n1.5,2,1\n";
    }
    CHECK_THROWS_AS(read_step_csv(path), ParseError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_step_csv(path), ParseError);
  }
}

TEST_CASE("system specs") {
  const auto sq = make_power(2);
  const auto sys = parse_system("diag:rule=-n,N=200,r=2", sq);
  CHECK(sys.size() == 200);
  CHECK(sys.eigenvalues[199] == -200);
  CHECK(sys.weights[3] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sys.rule == "-n");

  const auto listed = parse_system("diag:eig=0;-1;-4,r=3,weights=scaled:2", sq);
  CHECK(listed.size() == 3);
  CHECK(listed.r == 3);
  CHECK(listed.weights[0] == 0);
  CHECK(listed.weights[2] == doctest::Approx(4.0));
  CHECK(listed.weight_rule == WeightRule::scaled_inverse_phi);

  const auto explicit_w = parse_system("diag:rule=-n^2,N=3,weights=1;0;2.5", sq);
  CHECK(explicit_w.weights == std::vector<double>{1, 0, 2.5});
  CHECK_FALSE(explicit_w.default_weights());

  for (const char* bad : {"diag:rule=n,N=3", "diag:rule=-n", "diag:N=3", "diag:rule=-n,N=0", "diag:rule=-n,N=3,r=0.5",
                          "diag:rule=-n,N=3,weights=1;2", "diag:rule=-n,N=3,foo=1", "diag:eig=-1;-2,N=3",
                          "diag:rule=-n,eig=-1,N=1", "sys:rule=-n,N=3", "diag:rule=-n,N=3,weights=-1;1;1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_system(bad, sq), ParseError);
  }
}
