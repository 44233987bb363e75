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
#include <algorithm>
#include <cmath>

#include "orlicz/young.hpp"

namespace orlicz {

using numeric::format_number;

namespace {

// Relative slack of lhs <= rhs; zero when both sides vanish.
double slack(double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale == 0) return 0.0;
  if (!std::isfinite(scale)) return lhs <= rhs ? 0.0 : -kInf;
  return (rhs - lhs) / scale;
}

void record(InequalityCheck& c, double lhs, double rhs, double s, double t) {
  const double sl = slack(lhs, rhs);
  ++c.samples;
  if (sl < c.worst_slack) {
    c.worst_slack = sl;
    c.at_s = s;
    c.at_t = t;
  }
}

}  // namespace

YoungValidation validate_young(const YoungFunction& phi, int depth) {
  YoungValidation out;
  auto fail = [&out](std::string msg) {
    out.ok = false;
    out.failures.push_back(std::move(msg));
  };
  if (phi.forward(0.0) != 0.0) fail("forward(0) != 0");

  std::vector<double> ts;
  std::vector<double> vals;
  for (double t : numeric::dyadic_grid(depth)) {
    const double v = phi.forward(t);
    if (!std::isfinite(v)) break;
    ts.push_back(t);
    vals.push_back(v);
  }
  if (ts.size() < 3) {
    fail("too few finite samples");
    return out;
  }
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    if (!(vals[i + 1] > vals[i])) fail("not strictly increasing at t = " + format_number(ts[i]));

  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      const double mid = phi.forward(0.5 * (ts[i] + ts[j]));
      const double avg = 0.5 * (vals[i] + vals[j]);
      if (mid > avg * (1 + 1e-9)) {
        fail("midpoint convexity fails at (a, b) = (" + format_number(ts[i]) + ", " + format_number(ts[j]) + ")");
        break;
      }
    }
  }

  // Phi(t)/t must keep decreasing towards 0 and increasing towards infinity.
  std::vector<double> ratio(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) ratio[i] = vals[i] / ts[i];
  const std::size_t ends = std::min<std::size_t>(8, ts.size() - 1);
  for (std::size_t i = 0; i < ends; ++i)
    if (!(ratio[i] < ratio[i + 1])) fail("forward(t)/t does not decrease to 0 near t = " + format_number(ts[i]));
  for (std::size_t i = ts.size() - 1 - ends; i + 1 < ts.size(); ++i)
    if (!(ratio[i] < ratio[i + 1]))
      fail("forward(t)/t does not increase to infinity near t = " + format_number(ts[i + 1]));

  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double y = vals[i];
    if (!(y > 0)) continue;
    const double back = phi.forward(phi.inverse(y));
    if (std::abs(back - y) > 1e-9 * y) {
      fail("forward(inverse(t)) != t at t = " + format_number(y));
      break;
    }
  }
  return out;
}

YoungValidation validate_convex_increasing(const std::function<double(double)>& psi, int depth) {
  YoungValidation out;
  auto fail = [&out](std::string msg) {
    out.ok = false;
    out.failures.push_back(std::move(msg));
  };
  if (psi(0.0) != 0.0) fail("psi(0) != 0");
  std::vector<double> ts{0.0};
  std::vector<double> vals{0.0};
  for (double t : numeric::dyadic_grid(depth)) {
    const double v = psi(t);
    if (!std::isfinite(v)) break;
    ts.push_back(t);
    vals.push_back(v);
  }
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    if (vals[i + 1] < vals[i]) fail("psi decreasing at t = " + format_number(ts[i]));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      const double mid = psi(0.5 * (ts[i] + ts[j]));
      const double avg = 0.5 * (vals[i] + vals[j]);
      if (mid > avg * (1 + 1e-9)) {
        fail("psi midpoint convexity fails at (a, b) = (" + format_number(ts[i]) + ", " + format_number(ts[j]) +
             ")");
        break;
      }
    }
  }
  return out;
}

std::vector<double> default_delta2_grid(Delta2Mode mode) {
  return mode == Delta2Mode::global ? numeric::log_grid(1e-6, 50.0, 301) : numeric::log_grid(1.0, 50.0, 201);
}

Delta2Report check_delta2(const YoungFunction& phi, Delta2Mode mode, const std::vector<double>& grid) {
  Delta2Report rep;
  std::vector<double> ts;
  for (double t : grid)
    if (t > 0 && std::isfinite(t) && (mode == Delta2Mode::global || t >= 1.0)) ts.push_back(t);
  std::sort(ts.begin(), ts.end());
  rep.grid = ts;
  if (ts.empty()) throw PreconditionError("check_delta2: no admissible grid points");
  std::vector<double> ratios;
  for (double t : ts) {
    const double v = phi.forward(t);
    if (!(v > 0)) continue;
    const double r = phi.forward(2 * t) / v;
    ratios.push_back(r);
    if (r > rep.k_estimate || std::isnan(r)) {
      rep.k_estimate = std::isnan(r) ? kInf : r;
      rep.argmax_t = t;
    }
  }
  bool unbounded = !std::isfinite(rep.k_estimate);
  if (!unbounded && ratios.size() >= 6) {
    const std::size_t start = ratios.size() - ratios.size() / 3;
    bool nondecreasing = true;
    for (std::size_t i = start; i + 1 < ratios.size(); ++i)
      if (ratios[i + 1] < ratios[i] * (1 - 1e-12)) nondecreasing = false;
    if (nondecreasing && ratios.back() > 16.0 * ratios[start]) unbounded = true;
  }
  rep.holds = !unbounded;
  rep.verdict = unbounded ? "ratio unbounded on grid" : "holds on grid";
  return rep;
}

InequalityReport inequality_report(const YoungFunction& phi, const YoungFunction& phitilde, const ClassPSpec* spec,
                                   const std::vector<double>& grid, double tolerance) {
  InequalityReport rep;
  rep.tolerance = tolerance;
  InequalityCheck lower{"sandwich_lower"}, upper{"sandwich_upper"};
  for (double t : grid) {
    const double prod = phi.inverse(t) * phitilde.inverse(t);
    record(lower, t, prod, 0.0, t);
    record(upper, prod, 2 * t, 0.0, t);
  }
  rep.checks.push_back(lower);
  rep.checks.push_back(upper);

  if (spec) {
    const double p = spec->p(), q = spec->q(), pc = spec->p_conj(), qc = spec->q_conj();
    InequalityCheck inv{"inverse_scaling"}, fwd{"forward_scaling"}, conj{"conjugate_scaling"};
    InequalityCheck inv_low{"inverse_lower"}, conj_low{"conjugate_inverse_lower"};
    std::vector<double> phi_t, phit_t, inv_t, invt_t;
    for (double t : grid) {
      phi_t.push_back(phi.forward(t));
      phit_t.push_back(phitilde.forward(t));
      inv_t.push_back(phi.inverse(t));
      invt_t.push_back(phitilde.inverse(t));
    }
    for (double s : grid) {
      for (std::size_t j = 0; j < grid.size(); ++j) {
        const double t = grid[j];
        const double st = s * t;
        record(inv, phi.inverse(st), std::max(std::pow(s, 1 / p), std::pow(s, 1 / q)) * inv_t[j], s, t);
        record(fwd, phi.forward(st), std::max(std::pow(s, q), std::pow(s, p)) * phi_t[j], s, t);
        record(conj, phitilde.forward(st), std::max(std::pow(s, pc), std::pow(s, qc)) * phit_t[j], s, t);
        // Transformed bounds with u = s, v = t.
        record(inv_low, std::min(std::pow(s, 1 / p), std::pow(s, 1 / q)) * inv_t[j], phi.inverse(st), s, t);
        record(conj_low, std::min(std::pow(s, 1 / qc), std::pow(s, 1 / pc)) * invt_t[j], phitilde.inverse(st), s,
               t);
      }
    }
    for (auto* c : {&inv, &fwd, &conj, &inv_low, &conj_low}) rep.checks.push_back(*c);
  }
  for (auto& c : rep.checks) {
    if (c.samples == 0) c.worst_slack = 0.0;
    c.holds = c.worst_slack >= -tolerance;
    rep.holds = rep.holds && c.holds;
  }
  return rep;
}

double sector_rho_ratio(const RhoFunction& rho, std::complex<double> z) {
  return std::abs(rho(z)) / rho(std::abs(z));
}

SectorReport check_sector_equivalence(const ClassPSpec& spec, double delta, int samples) {
  const double pi = std::acos(-1.0);
  if (!(delta > 0 && delta <= pi / 2)) throw PreconditionError("sector: delta must lie in (0, pi/2]");
  if (samples < 1) throw PreconditionError("sector: samples must be positive");
  if (!spec.rho().holomorphic())
    throw UnsupportedError("sector: rho '" + spec.rho().name() + "' has no complex evaluation");
  SectorReport rep;
  const auto radii = numeric::log_grid(1e-6, 1e6, std::max(2, samples));
  for (double r : radii) {
    for (int j = 0; j < samples; ++j) {
      const double theta = -delta + (j + 0.5) * (2 * delta / samples);
      const std::complex<double> z = std::polar(r, theta);
      const double ratio = std::abs(spec.inverse_phi(z)) / spec.inverse_phi(r);
      const double rr = sector_rho_ratio(spec.rho(), z);
      ++rep.samples;
      if (ratio < rep.m0_est) {
        rep.m0_est = ratio;
        rep.argmin_z = z;
      }
      if (ratio > rep.m1_est) {
        rep.m1_est = ratio;
        rep.argmax_z = z;
      }
      rep.rho_ratio_min = std::min(rep.rho_ratio_min, rr);
      rep.rho_ratio_max = std::max(rep.rho_ratio_max, rr);
    }
  }
  rep.verdict = std::isfinite(rep.m0_est) && rep.m0_est > 0 && std::isfinite(rep.m1_est) && rep.m1_est > 0;
  return rep;
}

}  // namespace orlicz
