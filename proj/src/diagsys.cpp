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
#include "orlicz/diagsys.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "orlicz/parallel.hpp"

namespace orlicz {

namespace {

constexpr int kPerDecade = 16;

void check_system(const DiagonalSystem& sys) {
  if (sys.weights.size() != sys.eigenvalues.size())
    throw PreconditionError("diagonal system: one weight per eigenvalue");
  if (!(sys.r >= 1) || !std::isfinite(sys.r)) throw PreconditionError("diagonal system: r must lie in [1, inf)");
  for (double l : sys.eigenvalues)
    if (!(l <= 0) || !std::isfinite(l)) throw PreconditionError("diagonal system: eigenvalues must be finite and <= 0");
  for (double c : sys.weights)
    if (!(c >= 0) || !std::isfinite(c)) throw PreconditionError("diagonal system: weights must be finite and >= 0");
}

void check_vector(const DiagonalSystem& sys, const std::vector<double>& x) {
  if (x.size() > sys.size()) throw PreconditionError("coefficient vector longer than the system");
  for (double v : x)
    if (!std::isfinite(v)) throw PreconditionError("coefficient vector must be finite");
}

// Per-mode peaks over the last quarter must not increase (up to rounding) for
// the last computed value to bracket the discarded tail.
bool tail_nonincreasing(const std::vector<ModePeak>& peaks) {
  const std::size_t n = peaks.size();
  if (n < 4) return true;
  for (std::size_t i = n - n / 4; i < n; ++i) {
    if (peaks[i].value > peaks[i - 1].value * (1 + 1e-9) + 1e-300) return false;
  }
  return true;
}

// Whether the sampled ratio keeps growing towards an end of a log grid with
// kPerDecade points per decade.
bool keeps_growing(const std::vector<double>& vals, bool at_lower) {
  const std::size_t n = vals.size();
  const std::size_t d = kPerDecade;
  if (n <= 2 * d) return false;
  const double v0 = at_lower ? vals[0] : vals[n - 1];
  const double v1 = at_lower ? vals[d] : vals[n - 1 - d];
  const double v2 = at_lower ? vals[2 * d] : vals[n - 1 - 2 * d];
  if (!std::isfinite(v0)) return true;
  if (!(v1 > 0) || !(v2 > 0)) return false;
  return v0 / v1 > 1.01 && v0 / v1 >= (v1 / v2) * (1 - 1e-9);
}

struct GridPeak {
  ModePeak peak;
  bool unbounded = false;
};

// Maximise f over a log grid, refining an interior best point by golden
// section.  A best point at an open end whose values keep growing is
// reported unbounded; otherwise the end value stands.
template <class F>
GridPeak grid_peak(F&& f, const std::vector<double>& grid, const std::vector<double>* cached, bool lower_open,
                   bool upper_open) {
  std::vector<double> vals;
  if (cached) {
    vals = *cached;
  } else {
    vals.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f(grid[i]);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < vals.size(); ++i)
    if (vals[i] > vals[best]) best = i;
  GridPeak out;
  out.peak = {vals[best], grid[best]};
  if (best == 0) {
    out.unbounded = lower_open && keeps_growing(vals, true);
  } else if (best + 1 == vals.size()) {
    out.unbounded = upper_open && keeps_growing(vals, false);
  } else {
    const auto e = numeric::golden_max_log(f, grid[best - 1], grid[best + 1]);
    if (e.value >= out.peak.value) out.peak = {e.value, e.arg};
  }
  if (out.unbounded) out.peak.value = kInf;
  return out;
}

}  // namespace

double DiagonalSystem::growth_bound() const {
  double w = -kInf;
  for (double l : eigenvalues) w = std::max(w, l);
  return eigenvalues.empty() ? 0.0 : w;
}

std::string DiagonalSystem::describe() const {
  std::ostringstream os;
  os << "diag:";
  if (!rule.empty()) os << "rule=" << rule << ",";
  os << "N=" << size() << ",r=" << numeric::format_number(r) << ",weights=";
  switch (weight_rule) {
    case WeightRule::inverse_phi: os << "default"; break;
    case WeightRule::scaled_inverse_phi: os << "scaled:" << numeric::format_number(weight_scale); break;
    case WeightRule::explicit_list: os << "list"; break;
  }
  return os.str();
}

DiagonalSystem make_diagonal_system(std::vector<double> eigenvalues, double r, const YoungFunction& phi,
                                    double scale) {
  if (!(scale >= 0) || !std::isfinite(scale)) throw PreconditionError("diagonal system: weight scale must be >= 0");
  DiagonalSystem sys;
  sys.r = r;
  sys.weight_rule = scale == 1.0 ? WeightRule::inverse_phi : WeightRule::scaled_inverse_phi;
  sys.weight_scale = scale;
  sys.phi_name = phi.provenance();
  sys.weights.reserve(eigenvalues.size());
  for (double l : eigenvalues) sys.weights.push_back(l == 0 ? 0.0 : scale * phi.inverse(-l));
  sys.eigenvalues = std::move(eigenvalues);
  check_system(sys);
  return sys;
}

DiagonalSystem make_diagonal_system(std::vector<double> eigenvalues, double r, std::vector<double> weights) {
  DiagonalSystem sys;
  sys.r = r;
  sys.weight_rule = WeightRule::explicit_list;
  sys.eigenvalues = std::move(eigenvalues);
  sys.weights = std::move(weights);
  check_system(sys);
  return sys;
}

double lr_norm(const std::vector<double>& x, double r) {
  double m = 0;
  for (double v : x) m = std::max(m, std::abs(v));
  if (m == 0) return 0;
  double s = 0;
  for (double v : x) s += std::pow(std::abs(v) / m, r);
  return m * std::pow(s, 1.0 / r);
}

SampledFunction trajectory(const DiagonalSystem& sys, const std::vector<double>& x, double tau) {
  check_vector(sys, x);
  std::vector<ExpMode> modes;
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double amp = sys.weights[n] * x[n];
    if (amp != 0) modes.push_back({amp, -sys.eigenvalues[n]});
  }
  if (modes.empty()) modes.push_back({0.0, 1.0});
  return SampledFunction::sequence(std::move(modes), sys.r, 0.0, tau);
}

NormResult trajectory_output_norm(const DiagonalSystem& sys, const std::vector<double>& x, const YoungFunction& phi,
                                  double tau) {
  if (!(tau > 0)) throw PreconditionError("trajectory_output_norm: tau must be positive");
  check_vector(sys, x);
  bool any = false;
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double amp = sys.weights[n] * x[n];
    if (amp == 0) continue;
    any = true;
    if (!std::isfinite(tau) && sys.eigenvalues[n] == 0) {
      NormResult inf;
      inf.value = inf.lo = inf.hi = kInf;
      return inf;
    }
  }
  if (!any) return NormResult{};
  return luxemburg_norm(trajectory(sys, x, tau), phi);
}

AdmissibilityReport admissibility_constant(const DiagonalSystem& sys, const YoungFunction& phi, double tau,
                                           const AdmissibilityStrategy& strategy) {
  check_system(sys);
  const std::size_t N = sys.size();
  std::vector<std::vector<double>> cands;
  if (strategy.basis) {
    for (std::size_t n = 0; n < N; ++n) {
      std::vector<double> e(N, 0.0);
      e[n] = 1.0;
      cands.push_back(std::move(e));
    }
  }
  std::mt19937_64 rng(strategy.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_unit = [&] {
    std::vector<double> x(N);
    for (auto& v : x) v = gauss(rng);
    const double nx = lr_norm(x, sys.r);
    for (auto& v : x) v /= nx;
    return x;
  };
  for (int k = 0; k < strategy.random && N > 0; ++k) cands.push_back(random_unit());

  AdmissibilityReport rep;
  rep.tau = tau;
  rep.candidate_values.assign(cands.size(), 0.0);
  parallel_for(cands.size(), [&](std::size_t i) {
    rep.candidate_values[i] = trajectory_output_norm(sys, cands[i], phi, tau).value;
  });
  std::size_t best = 0;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (rep.candidate_values[i] > rep.candidate_values[best]) best = i;
  if (!cands.empty()) {
    rep.constant_lower = rep.candidate_values[best];
    rep.witness = cands[best];
  }

  // Random perturbations around the incumbent, shrinking each round.
  for (int round = 0; round < strategy.refine && N > 0 && std::isfinite(rep.constant_lower); ++round) {
    const double step = 0.2 * std::pow(0.6, round);
    std::vector<double> x = rep.witness;
    for (auto& v : x) v += step * gauss(rng);
    const double nx = lr_norm(x, sys.r);
    if (!(nx > 0)) continue;
    for (auto& v : x) v /= nx;
    const double val = trajectory_output_norm(sys, x, phi, tau).value;
    rep.candidate_values.push_back(val);
    if (val > rep.constant_lower) {
      rep.constant_lower = val;
      rep.witness = std::move(x);
    }
  }
  rep.candidates = static_cast<int>(rep.candidate_values.size());

  if (sys.default_weights()) {
    const double r = sys.r;
    const auto psi = [&phi, r](double t) { return phi(std::pow(t, 1.0 / r)); };
    if (validate_convex_increasing(psi).ok) rep.constant_upper = sys.weight_scale * std::pow(2.0, 1.0 / r);
  }
  if (!std::isfinite(rep.constant_lower)) {
    rep.verdict = "not admissible";
  } else if (rep.constant_upper) {
    rep.verdict = rep.constant_lower <= *rep.constant_upper * (1 + Tolerances::inequality_slack) ? "admissible"
                                                                                                  : "bound violated";
  } else {
    rep.verdict = "lower bound only";
  }
  return rep;
}

double resolvent_gain(const DiagonalSystem& sys, std::complex<double> z) {
  check_system(sys);
  if (!(z.real() > sys.growth_bound()) && !sys.eigenvalues.empty())
    throw PreconditionError("resolvent_gain: need Re z above the growth bound");
  double gain = 0;
  for (std::size_t n = 0; n < sys.size(); ++n) {
    if (sys.weights[n] == 0) continue;
    gain = std::max(gain, sys.weights[n] / std::abs(z - sys.eigenvalues[n]));
  }
  return gain;
}

const char* weight_name(WeissWeight w) {
  return w == WeissWeight::inverse_conjugate ? "inverse-conjugate" : "exp-norm";
}

WeissResult weiss_supremum(const DiagonalSystem& sys, const YoungFunction& phi, double alpha, WeissWeight weight) {
  check_system(sys);
  if (!(alpha >= 0) || !std::isfinite(alpha)) throw PreconditionError("weiss_supremum: alpha must be >= 0");
  WeissResult res;
  res.weight = weight;
  res.per_mode.assign(sys.size(), ModePeak{});
  const YoungFunction conj = complementary(phi);
  auto w = [&](double z) {
    if (weight == WeissWeight::inverse_conjugate) return conj.inverse(z);
    return 1.0 / exp_norm(z, conj).value;
  };

  double lo_scale = 1, hi_scale = 1;
  for (double l : sys.eigenvalues) {
    if (l < 0) {
      lo_scale = std::min(lo_scale, -l);
      hi_scale = std::max(hi_scale, -l);
    }
  }
  const double zlo = alpha > 0 ? alpha : 1e-8 * lo_scale;
  const double zhi = std::max(1e8 * hi_scale, 100 * zlo);
  const auto grid = numeric::log_grid_per_decade(zlo, zhi, kPerDecade);
  std::vector<double> wgrid(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { wgrid[i] = w(grid[i]); });

  std::vector<char> unbounded(sys.size(), 0);
  parallel_for(sys.size(), [&](std::size_t n) {
    const double c = sys.weights[n];
    if (c == 0) return;
    const double lambda = sys.eigenvalues[n];
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = wgrid[i] * c / (grid[i] - lambda);
    const auto f = [&](double z) { return w(z) * c / (z - lambda); };
    const auto gp = grid_peak(f, grid, &vals, alpha == 0, true);
    res.per_mode[n] = gp.peak;
    unbounded[n] = gp.unbounded;
  });

  for (std::size_t n = 0; n < sys.size(); ++n) {
    if (sys.weights[n] == 0) continue;
    if (res.n_star < 0 || res.per_mode[n].value > res.sup) {
      res.sup = res.per_mode[n].value;
      res.z_star = res.per_mode[n].arg;
      res.n_star = static_cast<int>(n);
    }
  }
  const bool diverges = std::any_of(unbounded.begin(), unbounded.end(), [](char u) { return u != 0; });
  res.tail_monotone = tail_nonincreasing(res.per_mode);
  if (diverges || !std::isfinite(res.sup)) {
    res.sup = kInf;
    res.verdict = "unbounded";
  } else if (!sys.rule.empty() && !res.tail_monotone) {
    res.verdict = "finite-N only";
  } else {
    res.verdict = "finite";
  }
  return res;
}

SemigroupSup semigroup_weiss_sup(const DiagonalSystem& sys, const YoungFunction& phi) {
  check_system(sys);
  SemigroupSup res;
  res.per_mode.assign(sys.size(), ModePeak{});
  std::vector<char> unbounded(sys.size(), 0);
  parallel_for(sys.size(), [&](std::size_t n) {
    const double c = sys.weights[n];
    if (c == 0) return;
    const double rate = -sys.eigenvalues[n];
    if (rate == 0) {
      // c / Phi^{-1}(1/t) grows without bound as t -> inf.
      res.per_mode[n] = {kInf, kInf};
      unbounded[n] = 1;
      return;
    }
    // Work in u = rate * t so that the peak sits near u = O(1).
    const auto f = [&](double u) {
      const double t = u / rate;
      return c * std::exp(-u) / phi.inverse(1.0 / t);
    };
    const auto grid = numeric::log_grid_per_decade(1e-10, 1e3, kPerDecade);
    auto gp = grid_peak(f, grid, nullptr, true, false);
    gp.peak.arg /= rate;
    res.per_mode[n] = gp.peak;
    unbounded[n] = gp.unbounded;
  });
  for (std::size_t n = 0; n < sys.size(); ++n) {
    if (sys.weights[n] == 0) continue;
    if (res.n_star < 0 || res.per_mode[n].value > res.sup) {
      res.sup = res.per_mode[n].value;
      res.t_star = res.per_mode[n].arg;
      res.n_star = static_cast<int>(n);
    }
  }
  const bool diverges = std::any_of(unbounded.begin(), unbounded.end(), [](char u) { return u != 0; });
  res.tail_monotone = tail_nonincreasing(res.per_mode);
  if (diverges || !std::isfinite(res.sup)) {
    res.sup = kInf;
    res.verdict = "unbounded";
  } else if (!sys.rule.empty() && !res.tail_monotone) {
    res.verdict = "finite-N only";
  } else {
    res.verdict = "finite";
  }
  return res;
}

CalculusConstant calculus_constant(const YoungFunction& phi, double t) {
  if (!(t > 0) || !std::isfinite(t)) throw PreconditionError("calculus_constant: t must be positive and finite");
  const double top = 1.0 / t;
  const double scale = phi.inverse(top);
  const auto f = [&](double s) { return phi.inverse(s) * std::exp(-s * t) / scale; };
  const auto grid = numeric::log_grid_per_decade(1e-14 * top, top, 2 * kPerDecade);
  const auto gp = grid_peak(f, grid, nullptr, false, false);
  return {gp.peak.value, gp.peak.arg};
}

AuxBound aux_bound_check(const YoungFunction& phi, double t) {
  if (!(t > 0) || !std::isfinite(t)) throw PreconditionError("aux_bound_check: t must be positive and finite");
  const auto f = [&](double s) { return s / phi.inverse(s) * std::exp(-0.5 * s * t); };
  // The peak lies in (0, 2/t]; the grid overshoots to confirm it.
  const auto grid = numeric::log_grid_per_decade(1e-14 / t, 1e3 / t, 2 * kPerDecade);
  const auto gp = grid_peak(f, grid, nullptr, false, false);
  AuxBound out;
  out.sup_value = gp.peak.value;
  out.argmax_s = gp.peak.arg;
  out.bound = 2.0 / (t * phi.inverse(1.0 / t));
  out.slack = (out.bound - out.sup_value) / out.bound;
  out.holds = out.slack >= -Tolerances::inequality_slack;
  return out;
}

WeakAdmissibility weak_admissibility_check(const DiagonalSystem& sys, const YoungFunction& phi,
                                           const std::vector<double>& x, double M) {
  check_vector(sys, x);
  WeakAdmissibility out;
  out.bound = M * lr_norm(x, sys.r);
  bool undamped = false;
  bool any = false;
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (sys.weights[n] * x[n] == 0) continue;
    any = true;
    if (sys.eigenvalues[n] == 0) undamped = true;
  }
  if (undamped) {
    out.weak_norm = kInf;
  } else if (any) {
    out.weak_norm = weak_orlicz_norm(trajectory(sys, x), phi).value;
  }
  const double scale = std::max(out.bound, 1e-300);
  out.slack = std::isfinite(out.weak_norm) ? (out.bound - out.weak_norm) / scale : -kInf;
  out.holds = out.slack >= -Tolerances::inequality_slack;
  return out;
}

}  // namespace orlicz
