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
#include <numeric>
#include <random>

#include "doctest.h"
#include "orlicz/diagsys.hpp"

using namespace orlicz;

namespace {

std::vector<double> minus_n(int N) {
  std::vector<double> l(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) l[static_cast<std::size_t>(n)] = -(n + 1.0);
  return l;
}

DiagonalSystem canonical(int N = 200) {
  auto sys = make_diagonal_system(minus_n(N), 2.0, make_power(2));
  sys.rule = "-n";
  return sys;
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = g(rng);
  return x;
}

const double kPeak = std::exp(-0.5) / std::sqrt(2.0);

}  // namespace

TEST_CASE("system construction") {
  const auto sys = canonical(5);
  CHECK(sys.weights[3] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sys.growth_bound() == -1.0);
  const auto with_zero = make_diagonal_system({0.0, -4.0}, 2.0, make_power(2));
  CHECK(with_zero.weights[0] == 0.0);
  CHECK(with_zero.weights[1] == doctest::Approx(2.0));
  CHECK_THROWS_AS(make_diagonal_system({1.0}, 2.0, make_power(2)), PreconditionError);
  CHECK_THROWS_AS(make_diagonal_system({-1.0}, 0.5, make_power(2)), PreconditionError);
  CHECK_THROWS_AS(make_diagonal_system({-1.0}, 2.0, std::vector<double>{-1.0}), PreconditionError);
}

TEST_CASE("trajectory output norm") {
  const auto sq = make_power(2);
  const auto sys = canonical();
  std::mt19937_64 rng(3);
  // sum_n n x_n^2 int e^{-2nt} dt = ||x||^2 / 2.
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_vector(rng, 200);
    const double expect = lr_norm(x, 2.0) / std::sqrt(2.0);
    CHECK(trajectory_output_norm(sys, x, sq).value == doctest::Approx(expect).epsilon(1e-9));
  }
  const auto single = make_diagonal_system({-1.0}, 2.0, std::vector<double>{1.0});
  CHECK(trajectory_output_norm(single, {1.0}, sq).value == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(trajectory_output_norm(sys, std::vector<double>(200, 0.0), sq).value == 0);

  SUBCASE("undamped coordinate") {
    const auto flat = make_diagonal_system({0.0, -1.0}, 2.0, std::vector<double>{3.0, 1.0});
    CHECK(std::isinf(trajectory_output_norm(flat, {1.0, 0.0}, sq).value));
    // 3 on (0, 4): L^2 norm 3 * 2.
    CHECK(trajectory_output_norm(flat, {1.0, 0.0}, sq, 4.0).value == doctest::Approx(6.0).epsilon(1e-9));
  }
  SUBCASE("finite horizon") {
    // int_0^tau e^{-2t} dt = (1 - e^{-2 tau}) / 2.
    const double tau = 0.7;
    CHECK(trajectory_output_norm(single, {1.0}, sq, tau).value ==
          doctest::Approx(std::sqrt(-std::expm1(-2 * tau) / 2)).epsilon(1e-9));
  }
}

TEST_CASE("admissibility constant") {
  const auto sq = make_power(2);
  const auto sys = canonical();
  AdmissibilityStrategy st;
  st.random = 100;
  st.refine = 3;
  st.seed = 17;
  const auto rep = admissibility_constant(sys, sq, kInf, st);
  CHECK(rep.constant_lower == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-6));
  for (double v : rep.candidate_values) CHECK(std::abs(v - 1 / std::sqrt(2.0)) <= 1e-6);
  REQUIRE(rep.constant_upper.has_value());
  CHECK(*rep.constant_upper == doctest::Approx(std::sqrt(2.0)));
  CHECK(rep.verdict == "admissible");
  CHECK(rep.candidates == 303);

  const auto zero = make_diagonal_system(minus_n(4), 2.0, std::vector<double>(4, 0.0));
  const auto z = admissibility_constant(zero, sq, kInf, st);
  CHECK(z.constant_lower == 0);
  CHECK_FALSE(z.constant_upper.has_value());

  SUBCASE("upper bound for other exponents") {
    // Phi = t^3 with r = 2: Phi(t^{1/2}) = t^{3/2} is convex.
    const auto cube = make_power(3);
    const auto s3 = make_diagonal_system(minus_n(20), 2.0, cube);
    AdmissibilityStrategy few;
    few.random = 10;
    const auto r3 = admissibility_constant(s3, cube, kInf, few);
    REQUIRE(r3.constant_upper.has_value());
    CHECK(r3.constant_lower <= *r3.constant_upper);
    CHECK(r3.verdict == "admissible");
  }
  SUBCASE("shifting the spectrum left never increases a finite-horizon constant") {
    std::mt19937_64 rng(8);
    const auto x = random_vector(rng, 10);
    const std::vector<double> c(10, 1.0);
    double prev = kInf;
    for (double eps : {0.0, 0.1, 0.5, 2.0}) {
      auto l = minus_n(10);
      for (auto& v : l) v -= eps;
      const auto s = make_diagonal_system(l, 2.0, c);
      const double val = trajectory_output_norm(s, x, sq, 5.0).value;
      CHECK(val <= prev * (1 + 1e-12));
      prev = val;
    }
  }
}

TEST_CASE("resolvent gain") {
  const auto sys = canonical();
  // max_n sqrt(n) / (z + n): n = z for integer z.
  CHECK(resolvent_gain(sys, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(resolvent_gain(sys, 4.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(resolvent_gain(sys, {4.0, 3.0}) <= resolvent_gain(sys, 4.0));
  CHECK_THROWS_AS(resolvent_gain(sys, -2.0), PreconditionError);
  const auto zero = make_diagonal_system(minus_n(3), 2.0, std::vector<double>(3, 0.0));
  CHECK(resolvent_gain(zero, 1.0) == 0);
}

TEST_CASE("Weiss supremum") {
  const auto sq = make_power(2);
  const auto sys = canonical();
  const auto w = weiss_supremum(sys, sq);
  CHECK(w.sup == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(w.verdict == "finite");
  for (std::size_t n = 0; n < sys.size(); ++n) {
    CHECK(w.per_mode[n].value == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(w.per_mode[n].arg / (n + 1.0) == doctest::Approx(1.0).epsilon(1e-3));
  }
  const auto e = weiss_supremum(sys, sq, 0.0, WeissWeight::exp_norm);
  CHECK(e.sup == doctest::Approx(std::sqrt(2.0)).epsilon(1e-3));
  // Admissibility forces the exp-norm weighted supremum below 2 c_inf.
  CHECK(e.sup <= 2 * std::sqrt(2.0));

  SUBCASE("abscissa above the peaks") {
    // Mode n peaks at z = n; with alpha = 300 every mode is read at the edge.
    const auto a = weiss_supremum(canonical(20), sq, 300.0);
    CHECK(a.z_star == doctest::Approx(300.0));
    CHECK(a.sup == doctest::Approx(2 * std::sqrt(300.0 * 20) / 320).epsilon(1e-9));
  }
  SUBCASE("growing peaks are flagged") {
    std::vector<double> c(40);
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = n + 1.0;
    auto grow = make_diagonal_system(minus_n(40), 2.0, c);
    grow.rule = "-n";
    CHECK(weiss_supremum(grow, sq).verdict == "finite-N only");
  }
  SUBCASE("undamped observed mode") {
    const auto flat = make_diagonal_system({0.0, -1.0}, 2.0, std::vector<double>{1.0, 1.0});
    const auto u = weiss_supremum(flat, sq);
    CHECK(u.verdict == "unbounded");
    CHECK(std::isinf(u.sup));
    CHECK(semigroup_weiss_sup(flat, sq).verdict == "unbounded");
  }
  const auto zero = make_diagonal_system(minus_n(3), 2.0, std::vector<double>(3, 0.0));
  CHECK(weiss_supremum(zero, sq).sup == 0);
}

TEST_CASE("semigroup supremum") {
  const auto sq = make_power(2);
  const auto s = semigroup_weiss_sup(canonical(), sq);
  CHECK(s.sup == doctest::Approx(kPeak).epsilon(1e-6));
  CHECK(s.verdict == "finite");
  for (std::size_t n = 0; n < s.per_mode.size(); ++n)
    CHECK(s.per_mode[n].arg * (n + 1.0) == doctest::Approx(0.5).epsilon(1e-4));
  const auto zero = make_diagonal_system({-1.0}, 2.0, std::vector<double>{0.0});
  CHECK(semigroup_weiss_sup(zero, sq).sup == 0);
}

TEST_CASE("calculus constant") {
  const auto t_grid = numeric::log_grid(1e-3, 1e3, 25);
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    const auto phi = make_power(p);
    // sup_s s^{1/p} e^{-st} sits at s = 1/(pt): c = (pe)^{-1/p}.
    const double expect = std::pow(p * std::exp(1.0), -1.0 / p);
    for (double t : t_grid) CHECK(calculus_constant(phi, t).value == doctest::Approx(expect).epsilon(1e-9));
  }
  CHECK(calculus_constant(make_power(2), 1.0).value == doctest::Approx(0.42888194248).epsilon(1e-9));
  for (const auto& spec : {ClassPSpec(2, 4, rho_min1()), ClassPSpec(2, 3, rho_log1p())}) {
    const auto phi = make_class_p(spec);
    for (double t : t_grid) {
      const double c = calculus_constant(phi, t).value;
      CHECK(c >= std::exp(-1.0) - 1e-9);
      CHECK(c <= 1 + 1e-9);
    }
  }
}

TEST_CASE("auxiliary bound") {
  const auto sq = make_power(2);
  const auto a = aux_bound_check(sq, 1.0);
  CHECK(a.sup_value == doctest::Approx(std::exp(-0.5)).epsilon(1e-9));
  CHECK(a.argmax_s == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(a.bound == doctest::Approx(2.0));
  CHECK(a.holds);
  for (const auto& phi : {make_power(3), make_power(1.5), make_class_p(ClassPSpec(2, 4, rho_min1()))}) {
    for (double t : numeric::log_grid(1e-3, 1e3, 13)) {
      const auto r = aux_bound_check(phi, t);
      CHECK(r.holds);
      CHECK(r.argmax_s <= 2 / t * (1 + 1e-6));
    }
  }
}

TEST_CASE("weak admissibility") {
  const auto sq = make_power(2);
  const auto sys = canonical();
  const double M = semigroup_weiss_sup(sys, sq).sup;
  std::vector<double> e1(200, 0.0);
  e1[0] = 1;
  const auto w = weak_admissibility_check(sys, sq, e1, M);
  CHECK(w.weak_norm == doctest::Approx(kPeak).epsilon(1e-8));
  CHECK(w.holds);
  const auto z = weak_admissibility_check(sys, sq, std::vector<double>(5, 0.0), M);
  CHECK(z.weak_norm == 0);
  CHECK(z.holds);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_vector(rng, 10);
    const auto r = weak_admissibility_check(sys, sq, x, M);
    CHECK(r.slack >= -1e-8);
  }
}
