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
#include <random>

#include "doctest.h"
#include "orlicz/shift.hpp"

using namespace orlicz;

TEST_CASE("right shift") {
  const auto f = SampledFunction::step({0, 1, 2}, {1, 0});
  CHECK(right_shift(f, 0).breaks() == f.breaks());
  const auto g = right_shift(f, 1);
  CHECK(g.value(0.5) == 0);
  CHECK(g.value(1.5) == 1);
  CHECK(right_shift(f, 5).is_zero());

  SUBCASE("semigroup law on breakpoints") {
    const auto h = SampledFunction::step({0, 0.25, 1.5, 3, 4}, {2, -1, 0.5, 3});
    const auto twice = right_shift(right_shift(h, 0.5), 0.75);
    const auto once = right_shift(h, 1.25);
    for (double r = 0.01; r < 4; r += 0.01) CHECK(twice.value(r) == once.value(r));
  }
  SUBCASE("translation keeps the norm of interior functions") {
    const auto h = SampledFunction::step({0, 1, 1.5, 2, 5}, {0, 2, -1, 0});
    for (const auto& phi : {make_power(2), make_power(3), make_class_p(ClassPSpec(2, 4, rho_min1()))}) {
      const double before = luxemburg_norm(h, phi).value;
      CHECK(luxemburg_norm(right_shift(h, 0.8), phi).value == doctest::Approx(before).epsilon(1e-9));
    }
  }
}

TEST_CASE("continuity modulus") {
  const auto sq = make_power(2);
  const auto f = SampledFunction::step({0, 1, 2}, {1, 0});
  // The symmetric difference of (0,1) and (t,1+t) has measure 2t.
  for (double t : {0.5, 0.1, 1e-3}) CHECK(shift_continuity_modulus(f, sq, t) == doctest::Approx(std::sqrt(2 * t)).epsilon(1e-8));
  CHECK(shift_continuity_modulus(f, sq, 0) == 0);

  const auto g = SampledFunction::step({0, 0.3, 0.7, 1, 2}, {2, -1, 4, 0});
  for (const auto& phi : {make_class_p(ClassPSpec(2, 4, rho_min1())), make_class_p(ClassPSpec(1.5, 3, rho_log1p())),
                          make_power(1.5)}) {
    double prev = kInf;
    const double first = shift_continuity_modulus(g, phi, 0.25);
    for (int k = 2; k <= 40; k += 2) {
      const double m = shift_continuity_modulus(g, phi, std::ldexp(1.0, -k));
      CHECK(m < prev);
      prev = m;
    }
    // Slowest decay in the corpus is like t^{1/4}.
    CHECK(prev < 0.01 * first);
  }
}

TEST_CASE("counterexample construction") {
  const auto phi = make_expm1t();
  const auto b = build_delta2_counterexample(phi, 20);
  REQUIRE(b.tks.size() == 20);
  CHECK(b.tks[0] == doctest::Approx(1.147).epsilon(1e-12));
  CHECK(b.growth[0] == doctest::Approx(6.609066140547367).epsilon(1e-10));
  for (int k = 2; k <= 20; ++k) CHECK(b.tks[static_cast<std::size_t>(k - 1)] == doctest::Approx(k).epsilon(1e-12));

  double prev_right = 0;
  double zeta_part = 0, growth_floor = 0;
  for (std::size_t i = 0; i < b.tks.size(); ++i) {
    const double k = i + 1.0;
    const double n = b.n0 + k - 1;
    CHECK(phi(b.tks[i]) > 1);
    CHECK(b.growth[i] >= k);
    const auto [l, r] = b.intervals[i];
    CHECK(l > prev_right);
    CHECK(r < 1);
    CHECK(b.lengths[i] == 1 / (phi(b.tks[i]) * n * n));
    // Endpoints carry absolute rounding near 1e-16.
    CHECK(std::abs((r - l) - b.lengths[i]) <= 1e-15);
    prev_right = r;
    zeta_part += 1 / (n * n);
    growth_floor += k / (n * n);
    CHECK(b.modular_u[i] == doctest::Approx(zeta_part).epsilon(1e-12));
    CHECK(b.modular_2u[i] >= growth_floor * (1 - 1e-12));
  }
  CHECK(b.modular_u.back() < 1);
  // The step u integrates to the same modular, up to the endpoint rounding
  // of the shortest pieces.
  CHECK(std::abs(modular(b.u, phi, 1.0) / b.modular_u.back() - 1) <= 1e-7);
  CHECK(std::abs(modular(b.v, phi, 4.0) / b.modular_u.back() - 1) <= 1e-7);

  CHECK_THROWS_AS(build_delta2_counterexample(make_power(2), 5), PreconditionError);
  CHECK_THROWS_AS(build_delta2_counterexample(phi, 0), PreconditionError);
}

TEST_CASE("counterexample discontinuity") {
  const auto phi = make_expm1t();
  const auto b = build_delta2_counterexample(phi, 20);
  for (double t : {1e-3, 1e-6, 1e-9}) {
    const auto d = counterexample_discontinuity(b, t, 20);
    CHECK(d.verdict == "discontinuous");
    CHECK(d.crossing > 0);
    CHECK(d.partial_modular[static_cast<std::size_t>(d.crossing - 1)] > 1);
    if (d.crossing > 1) CHECK(d.partial_modular[static_cast<std::size_t>(d.crossing - 2)] <= 1);
  }
  SUBCASE("closed-form partial modular agrees with direct step arithmetic") {
    for (int K : {3, 6, 10}) {
      const auto small = build_delta2_counterexample(phi, K);
      for (double t : {1e-3, 1e-6}) {
        const auto d = counterexample_discontinuity(small, t, K);
        const auto diff = add_steps(right_shift(small.v, t), small.v, 1.0, -1.0);
        CHECK(std::abs(modular(diff, phi, 1.0) / d.partial_modular.back() - 1) <= 1e-7);
      }
    }
  }
  const auto zero = counterexample_discontinuity(b, 0.0, 5);
  CHECK(zero.verdict == "continuous at 0");
  CHECK(zero.partial_modular.back() == 0);
  CHECK_THROWS_AS(counterexample_discontinuity(b, 0.05, 20), UnsupportedError);
}

namespace {

DiagonalSystem canonical() {
  std::vector<double> l(200);
  for (std::size_t n = 0; n < l.size(); ++n) l[n] = -(n + 1.0);
  return make_diagonal_system(l, 2.0, make_power(2));
}

}  // namespace

TEST_CASE("Engel R(t)") {
  const auto single = make_diagonal_system({-1.0}, 2.0, std::vector<double>{1.0});
  const auto s = engel_R_apply(single, {1.0}, 1.0, 2.0, {0.5, 1.0, 1.5});
  CHECK(s.values[0][0] == doctest::Approx(-std::exp(-0.5)).epsilon(1e-15));
  CHECK(s.values[1][0] == -1.0);
  CHECK(s.values[2][0] == 0.0);

  const auto sys = canonical();
  std::vector<double> x(200, 0.0);
  x[3] = 2;
  const auto at_t = engel_R_apply(sys, x, 0.4, 1.0, {0.4});
  CHECK(at_t.values[0][3] == doctest::Approx(-2 * sys.weights[3]).epsilon(1e-15));
}

TEST_CASE("Engel cocycle") {
  const auto sys = canonical();
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double tau = 2.0;
  std::vector<double> grid;
  for (int i = 0; i <= 400; ++i) grid.push_back(tau * i / 400.0);
  std::vector<double> x(200);
  for (auto& v : x) v = g(rng);
  CHECK(engel_cocycle_defect(sys, x, 0.7, 0.0, tau, grid) == 0.0);
  CHECK(engel_cocycle_defect(sys, x, 0.0, 0.7, tau, grid) == 0.0);
  for (int trial = 0; trial < 100; ++trial) {
    for (auto& v : x) v = g(rng);
    const double t = u(rng), s = u(rng);
    CHECK(engel_cocycle_defect(sys, x, t, s, tau, grid) <= 1e-10);
  }
  CHECK_THROWS_AS(engel_cocycle_defect(sys, x, 1.5, 1.0, tau, grid), PreconditionError);
}

TEST_CASE("integral operator L") {
  const double tau = 3.0;
  const auto one = integral_operator_L(SampledFunction::constant(1.0, 0.0, tau).kind() == FunctionKind::step
                                           ? SampledFunction::constant(1.0, 0.0, tau)
                                           : SampledFunction::step({0.0, tau}, {1.0}),
                                       tau);
  for (double t : {1e-6, 0.1, 1.0, 2.9}) CHECK(one.value(t) == doctest::Approx(std::log(tau / t)).epsilon(1e-14));

  const auto upper_half = integral_operator_L(SampledFunction::step({0.0, tau / 2, tau}, {0.0, 1.0}), tau);
  for (double t : {0.01, 1.0, 1.5}) CHECK(upper_half.value(t) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(upper_half.value(2.0) == doctest::Approx(std::log(tau / 2.0)).epsilon(1e-14));

  const auto away = integral_operator_L(SampledFunction::step({1.0, 2.0, tau}, {2.0, -1.0}), tau);
  CHECK(away.value(0.5) == doctest::Approx(2 * std::log(2.0) - std::log(1.5)).epsilon(1e-14));
  CHECK(integral_operator_L_at_zero(SampledFunction::step({1.0, 2.0, tau}, {2.0, -1.0})) ==
        doctest::Approx(2 * std::log(2.0) - std::log(1.5)).epsilon(1e-14));
  CHECK(std::isinf(integral_operator_L_at_zero(SampledFunction::step({0.0, tau}, {1.0}))));

  CHECK(integral_operator_L(SampledFunction::step({0.0, tau}, {0.0}), tau).is_zero());

  SUBCASE("linear and positive") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> v(0.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
      const auto f = SampledFunction::step({0.0, 0.5, 1.7, tau}, {v(rng), v(rng), v(rng)});
      const auto h = SampledFunction::step({0.0, 1.0, 2.5, tau}, {v(rng), v(rng), v(rng)});
      const auto lf = integral_operator_L(f, tau);
      const auto lh = integral_operator_L(h, tau);
      const auto lsum = integral_operator_L(add_steps(f, h, 2.0, -0.5), tau);
      for (double t : {0.01, 0.6, 2.0, 2.99}) {
        CHECK(lf.value(t) >= 0);
        CHECK(lsum.value(t) == doctest::Approx(2 * lf.value(t) - 0.5 * lh.value(t)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("operator L norm estimates") {
  // int_0^tau ln^2(tau/t) dt = 2 tau.
  for (double tau : {1.0, 10.0}) {
    const auto e = estimate_L_norm(make_power(2), tau, 1);
    CHECK(e.ratios[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  }
  for (double p : {1.5, 2.0, 3.0}) {
    const auto e = estimate_L_norm(make_power(p), 5.0, 60, 3);
    CHECK(e.max_ratio <= p + 1e-6);
    CHECK(e.max_ratio > 1);
  }
  const auto phi = make_class_p(ClassPSpec(2, 3, rho_min1()));
  double lo = kInf, hi = 0;
  for (double tau : {1.0, 10.0, 100.0}) {
    const double m = estimate_L_norm(phi, tau, 60, 6).max_ratio;
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  CHECK(hi / lo <= 1.1);
}
