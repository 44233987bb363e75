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
// Acceptance criteria: one PASS/FAIL line per criterion, nonzero exit when
// any fails.  Tolerances and runtime limits are fixed here.
//
//   acceptance CLI_PATH SCRATCH_DIR

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "orlicz/diagsys.hpp"
#include "orlicz/harness.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/shift.hpp"
#include "orlicz/spec_language.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

const std::vector<std::string> kBuiltins = {"power:1.5", "power:2", "power:3", "classp:2,3,min1", "classp:2,3,log1p",
                                            "expm1t"};

std::vector<double> random_unit(std::mt19937_64& rng, std::size_t n, double r) {
  std::normal_distribution<double> g;
  std::vector<double> x(n);
  double s = 0;
  for (auto& v : x) {
    v = g(rng);
    s += std::pow(std::abs(v), r);
  }
  for (auto& v : x) v /= std::pow(s, 1 / r);
  return x;
}

DiagonalSystem canonical() { return parse_system("diag:rule=-n,N=200,r=2", make_power(2)); }

Outcome conjugation() {
  double worst = 0, worst_bi = 0;
  for (double p : {1.5, 2.0, 3.0}) {
    const auto phi = make_power(p);
    const auto conj = conjugate_numeric(phi);
    const auto bi = conjugate_numeric(conj);
    for (double s : numeric::log_grid(1e-3, 1e3, 60)) {
      const double exact = (p - 1) * std::pow(p, -p / (p - 1)) * std::pow(s, p / (p - 1));
      worst = std::max(worst, std::abs(conj(s) / exact - 1));
      worst_bi = std::max(worst_bi, std::abs(bi(s) / std::pow(s, p) - 1));
    }
  }
  return {worst <= 1e-8 && worst_bi <= 1e-6,
          "max rel err conjugate " + fmt(worst) + " (tol 1e-8), biconjugate " + fmt(worst_bi) + " (tol 1e-6)"};
}

Outcome sandwich() {
  const auto grid = numeric::log_grid(1e-6, 1e6, 200);
  double worst = kInf;
  bool agree = true;
  for (const auto& spec : kBuiltins) {
    const auto phi = parse_phi(spec);
    const auto conj = complementary(phi);
    double local = kInf;
    for (double t : grid) {
      const double prod = phi.inverse(t) * conj.inverse(t);
      local = std::min({local, (prod - t) / std::max(prod, t), (2 * t - prod) / std::max(prod, 2 * t)});
    }
    const auto rep = inequality_report(phi, conj, nullptr, grid);
    const double reported = std::min(rep.checks[0].worst_slack, rep.checks[1].worst_slack);
    agree = agree && std::abs(reported - local) <= 1e-12 + 1e-9 * std::abs(local);
    worst = std::min(worst, local);
  }
  return {worst >= -1e-8 && agree, "worst relative slack " + fmt(worst) + " over " + std::to_string(kBuiltins.size()) +
                                       " pairs (tol -1e-8)" + (agree ? "" : "; report disagrees")};
}

Outcome lp_consistency() {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> pieces(1, 12);
  std::uniform_real_distribution<double> len(0.01, 3.0), val(-5.0, 5.0);
  double worst = 0;
  int count = 0;
  for (double p : {1.5, 2.0, 3.0}) {
    const auto phi = make_power(p);
    for (int i = 0; i < 500; ++i) {
      std::vector<double> br{0.0}, v;
      double sum = 0;
      for (int k = pieces(rng); k > 0; --k) {
        const double l = len(rng), a = val(rng);
        br.push_back(br.back() + l);
        v.push_back(a);
        sum += std::pow(std::abs(a), p) * l;
      }
      const double oracle = std::pow(sum, 1 / p);
      if (oracle == 0) continue;
      const double lux = luxemburg_norm(SampledFunction::step(br, v), phi).value;
      worst = std::max(worst, std::abs(lux - oracle) / oracle);
      ++count;
    }
  }
  return {worst <= 1e-8, "max rel err " + fmt(worst) + " over " + std::to_string(count) + " step functions (tol 1e-8)"};
}

Outcome exp_norm_lemma() {
  double worst = 0, classp_floor = kInf;
  for (const auto& spec : kBuiltins) {
    const auto phi = parse_phi(spec);
    const auto conj = complementary(phi);
    for (double s : numeric::log_grid(1e-3, 1e3, 25)) {
      const double prod = conj.inverse(s) * exp_norm(s, conj).hi;
      worst = std::max(worst, prod);
      if (phi.class_p()) classp_floor = std::min(classp_floor, prod);
    }
  }
  return {worst <= 1 + 1e-8 && classp_floor > 0,
          "max product " + fmt(worst) + " (bound 1 + 1e-8); class-P lower constant " + fmt(classp_floor)};
}

Outcome calculus() {
  double lo = kInf, hi = 0;
  for (const std::string spec : {"power:1.5", "power:2", "power:3", "classp:2,3,min1", "classp:2,3,log1p"}) {
    const auto phi = parse_phi(spec);
    for (double t : numeric::log_grid(1e-3, 1e3, 25)) {
      const double c = calculus_constant(phi, t).value;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  const double square = calculus_constant(make_power(2), 1.0).value;
  const double expect = std::exp(-0.5) / std::sqrt(2.0);
  const bool ok = lo >= std::exp(-1.0) - 1e-9 && hi <= 1 + 1e-9 && std::abs(square - expect) <= 1e-6;
  return {ok, "range [" + fmt(lo) + ", " + fmt(hi) + "], t^2 value " + fmt(square) + " (expect " + fmt(expect) + ")"};
}

Outcome admissibility() {
  const auto sys = canonical();
  const auto phi = make_power(2);
  std::mt19937_64 rng(413);
  const double target = 1 / std::sqrt(2.0);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const auto x = random_unit(rng, sys.size(), 2);
    worst = std::max(worst, std::abs(trajectory_output_norm(sys, x, phi, kInf).value - target));
  }
  AdmissibilityStrategy st;
  st.random = 100;
  st.seed = 413;
  const auto rep = admissibility_constant(sys, phi, kInf, st);
  const double upper = rep.constant_upper.value_or(kInf);
  const bool ok = worst <= 1e-6 && std::abs(rep.constant_lower - target) <= 1e-6 && rep.constant_lower <= std::sqrt(2.0) &&
                  upper == std::sqrt(2.0);
  return {ok, "constant " + fmt(rep.constant_lower) + ", max deviation over 100 vectors " + fmt(worst) +
                  ", bound " + fmt(upper)};
}

Outcome weiss() {
  const auto sys = canonical();
  const auto w = weiss_supremum(sys, make_power(2));
  double worst_arg = 0;
  for (std::size_t n = 0; n < sys.size(); ++n)
    worst_arg = std::max(worst_arg, std::abs(w.per_mode[n].arg / (n + 1.0) - 1));
  const auto e = weiss_supremum(sys, make_power(2), 0.0, WeissWeight::exp_norm);
  const bool ok = std::abs(w.sup - 1) <= 1e-3 && worst_arg <= 1e-3 && std::abs(e.sup - std::sqrt(2.0)) <= 1e-3;
  return {ok, "inverse-conjugate sup " + fmt(w.sup) + ", argmax rel dev " + fmt(worst_arg) + ", exp-norm sup " +
                  fmt(e.sup)};
}

Outcome chain() {
  const auto sys = canonical();
  const auto phi = make_power(2);
  const auto s = semigroup_weiss_sup(sys, phi);
  const double expect = std::exp(-0.5) / std::sqrt(2.0);
  std::mt19937_64 rng(48);
  double worst = kInf;
  for (int i = 0; i < 100; ++i)
    worst = std::min(worst, weak_admissibility_check(sys, phi, random_unit(rng, sys.size(), 2), s.sup).slack);
  const bool ok = std::abs(s.sup - expect) <= 1e-6 && worst >= -1e-8;
  return {ok, "semigroup sup " + fmt(s.sup) + " (expect " + fmt(expect) + "), worst weak slack " + fmt(worst)};
}

Outcome engel() {
  const auto sys = canonical();
  const double tau = 2.0;
  std::vector<double> grid;
  for (int i = 0; i <= 400; ++i) grid.push_back(tau * i / 400.0);
  std::mt19937_64 rng(412);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const auto x = random_unit(rng, sys.size(), 2);
    const double t = u(rng), s = u(rng);
    worst = std::max(worst, engel_cocycle_defect(sys, x, t, s, tau, grid));
  }
  return {worst <= 1e-10, "max defect " + fmt(worst) + " (tol 1e-10)"};
}

Outcome operator_l() {
  const double one = estimate_L_norm(make_power(2), 1.0, 1).ratios[0];
  double worst_excess = -kInf;
  for (double p : {1.5, 2.0, 3.0}) {
    const auto e = estimate_L_norm(make_power(p), 3.0, 200, 11);
    for (double r : e.ratios) worst_excess = std::max(worst_excess, r - p);
    worst_excess = std::max(worst_excess, e.max_ratio - p);
  }
  const auto phi = parse_phi("classp:2,3,min1");
  double lo = kInf, hi = 0;
  std::string per_tau;
  for (double tau : {1.0, 10.0, 100.0}) {
    const double m = estimate_L_norm(phi, tau, 30, 5).max_ratio;
    lo = std::min(lo, m);
    hi = std::max(hi, m);
    per_tau += (per_tau.empty() ? "" : "/") + fmt(m);
  }
  const bool ok = std::abs(one - std::sqrt(2.0)) <= 1e-9 && worst_excess <= 1e-6 && hi / lo <= 1.1;
  return {ok, "f = 1 ratio " + fmt(one) + ", max ratio - p " + fmt(worst_excess) + ", class-P max ratios " + per_tau +
                  " (spread " + fmt(hi / lo) + ")"};
}

Outcome counterexample() {
  const int K = 20;
  const auto b = build_delta2_counterexample(make_expm1t(), K);
  bool ok = b.modular_u.back() < 1;
  std::string detail = "int Phi(u) partial sum " + fmt(b.modular_u.back());
  for (double t : {1e-3, 1e-6}) {
    const auto d = counterexample_discontinuity(b, t, K);
    ok = ok && d.crossing > 0 && d.partial_modular.back() > 1;
    detail += "; t = " + fmt(t) + ": modular " + fmt(d.partial_modular.back()) + " crosses 1 at K = " +
              std::to_string(d.crossing);
  }
  return {ok, detail};
}

Outcome sector() {
  const auto phi = parse_phi("classp:2,3,log1p");
  const auto rep = check_sector_equivalence(*phi.class_p(), M_PI / 3, 200);
  const bool ok = rep.rho_ratio_min >= 0.25 - 1e-9 && std::isfinite(rep.m1_est) && std::isfinite(rep.rho_ratio_max);
  return {ok, "min ratio " + fmt(rep.rho_ratio_min) + ", max ratio " + fmt(rep.rho_ratio_max) + ", m1 " +
                  fmt(rep.m1_est)};
}

std::string strip_runtime(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  Json j = Json::parse(ss.str());
  for (auto& r : j) r.erase("runtime_ms");
  return j.dump();
}

Outcome determinism(const std::string& cli, const std::string& scratch) {
  const std::string a = scratch + "/run_all_a.json", b = scratch + "/run_all_b.json";
  for (const auto& p : {a, b}) {
    std::remove(p.c_str());
    const std::string cmd = "\"" + cli + "\" run-all --seed 17 --out \"" + p + "\"";
    const int rc = std::system(cmd.c_str());
    if (rc != 0) return {false, "run-all exited with status " + std::to_string(rc)};
  }
  const bool same = strip_runtime(a) == strip_runtime(b);
  return {same, same ? "reports identical apart from runtime_ms" : "reports differ"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance CLI_PATH SCRATCH_DIR\n";
    return 2;
  }
  const std::string cli = argv[1], scratch = argv[2];
  struct Criterion {
    const char* name;
    double limit_s;  // 0: no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"conjugation of powers", 5, conjugation},
      {"sandwich inequality", 5, sandwich},
      {"Luxemburg norm against L^p", 10, lp_consistency},
      {"exponential-norm lemma", 10, exp_norm_lemma},
      {"calculus constant", 10, calculus},
      {"l^2 admissibility constant", 20, admissibility},
      {"Phi-Weiss supremum", 20, weiss},
      {"Weiss, semigroup and weak admissibility chain", 20, chain},
      {"Engel cocycle", 5, engel},
      {"integral operator L", 30, operator_l},
      {"Delta2 counterexample", 10, counterexample},
      {"sector equivalence", 10, sector},
      {"run-all determinism", 0, [&] { return determinism(cli, scratch); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s == 0 || secs < c.limit_s;
    const bool pass = o.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s %2zu %s: %s; %.2f s%s\n", pass ? "PASS" : "FAIL", i + 1, c.name, o.detail.c_str(), secs,
                in_time ? "" : (" exceeds " + fmt(c.limit_s) + " s").c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
