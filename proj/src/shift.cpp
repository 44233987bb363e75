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
#include "orlicz/shift.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "orlicz/parallel.hpp"

namespace orlicz {

SampledFunction right_shift(const SampledFunction& input, double t) {
  // A constant on a bounded interval is a one-piece step function.
  const bool constant = input.kind() == FunctionKind::exp && input.rate() == 0 && std::isfinite(input.upper());
  const SampledFunction f =
      constant ? SampledFunction::step({input.lower(), input.upper()}, {input.amplitude()}) : input;
  if (f.kind() != FunctionKind::step) throw UnsupportedError("right_shift: step functions only");
  if (!(t >= 0) || !std::isfinite(t)) throw PreconditionError("right_shift: t must be finite and >= 0");
  if (t == 0) return f;
  const double a = f.lower();
  const double b = f.upper();
  if (!(a + t < b)) return SampledFunction::zero(a, b);
  std::vector<double> breaks{a};
  std::vector<double> values{0.0};
  const auto& br = f.breaks();
  const auto& vals = f.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double lo = br[i] + t;
    if (!(lo < b)) break;
    breaks.push_back(lo);
    values.push_back(vals[i]);
  }
  breaks.push_back(b);
  return SampledFunction::step(std::move(breaks), std::move(values));
}

double shift_continuity_modulus(const SampledFunction& f, const YoungFunction& phi, double t) {
  if (t == 0) return 0;
  return luxemburg_norm(add_steps(right_shift(f, t), right_shift(f, 0), 1.0, -1.0), phi).value;
}

CounterexampleBuild build_delta2_counterexample(const YoungFunction& phi, int K, int n0, double scan_step) {
  if (K < 1) throw PreconditionError("counterexample: need K >= 1");
  if (n0 < 2) throw PreconditionError("counterexample: the tail sum from n0 must stay below 1, so n0 >= 2");
  if (!(scan_step > 0)) throw PreconditionError("counterexample: scan step must be positive");
  const auto d2 = check_delta2(phi, Delta2Mode::near_infinity, default_delta2_grid(Delta2Mode::near_infinity));
  if (d2.holds)
    throw PreconditionError("counterexample: Phi satisfies Delta2 near infinity on the grid (K ~ " +
                            numeric::format_number(d2.k_estimate) + ")");

  CounterexampleBuild b(phi);
  b.n0 = n0;
  // t_k: first lattice point from max(k, t_{k-1}) with Phi(t) > 1 and
  // Phi(2t) >= k Phi(t).
  double prev = 0;
  for (int k = 1; k <= K; ++k) {
    const double start = std::max(static_cast<double>(k), prev);
    const long max_steps = 10'000'000;
    double t = start;
    bool found = false;
    for (long j = 0; j < max_steps; ++j) {
      t = start + static_cast<double>(j) * scan_step;
      const double pt = phi(t);
      if (!std::isfinite(pt)) break;
      if (pt > 1 && phi(2 * t) >= k * pt) {
        found = true;
        break;
      }
    }
    if (!found) {
      std::ostringstream os;
      os << "counterexample: scan stalled at k = " << k << " (t up to " << numeric::format_number(t)
         << "); Phi may satisfy Delta2 on the scanned range or overflow";
      throw ConstructionError(os.str());
    }
    b.tks.push_back(t);
    b.growth.push_back(phi(2 * t) / phi(t));
    prev = t;
  }

  // Right ends 1 - sum_{n >= n0 + k} 1/n^2, from the exact tail
  // pi^2/6 - sum_{n < n0 + k} 1/n^2.
  const double zeta2 = M_PI * M_PI / 6;
  double head = 0;
  for (int n = 1; n < n0; ++n) head += 1.0 / (static_cast<double>(n) * n);
  std::vector<double> right(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) {
    const double n = n0 + k - 1;
    head += 1.0 / (n * n);
    right[static_cast<std::size_t>(k - 1)] = 1 - (zeta2 - head);
  }

  std::vector<double> breaks{0.0};
  std::vector<double> uvals;
  double mu = 0, m2u = 0;
  for (int k = 1; k <= K; ++k) {
    const std::size_t i = static_cast<std::size_t>(k - 1);
    const double n = n0 + k - 1;
    const double pt = phi(b.tks[i]);
    const double len = 1.0 / (pt * n * n);
    const double r = right[i];
    const double l = r - len;
    if (!(l > breaks.back())) throw ConstructionError("counterexample: intervals overlap");
    b.gaps.push_back(l - breaks.back());
    b.intervals.emplace_back(l, r);
    b.lengths.push_back(len);
    breaks.push_back(l);
    uvals.push_back(0.0);
    breaks.push_back(r);
    uvals.push_back(b.tks[i]);
    mu += pt * len;
    m2u += phi(2 * b.tks[i]) * len;
    b.modular_u.push_back(mu);
    b.modular_2u.push_back(m2u);
  }
  breaks.push_back(1.0);
  uvals.push_back(0.0);
  std::vector<double> vvals = uvals;
  for (auto& x : vvals) x *= 4;
  b.u = SampledFunction::step(breaks, std::move(uvals));
  b.v = SampledFunction::step(std::move(breaks), std::move(vvals));
  return b;
}

Discontinuity counterexample_discontinuity(const CounterexampleBuild& build, double t, int K) {
  Discontinuity out;
  out.t = t;
  if (!(t >= 0) || !std::isfinite(t)) throw PreconditionError("counterexample_discontinuity: t must be >= 0");
  if (K < 1 || K > static_cast<int>(build.tks.size()))
    throw PreconditionError("counterexample_discontinuity: K outside the build");
  if (t == 0) {
    out.partial_modular.assign(static_cast<std::size_t>(K), 0.0);
    out.verdict = "continuous at 0";
    return out;
  }
  const std::size_t kk = static_cast<std::size_t>(K);
  const double room = 1.0 - build.intervals[kk - 1].second;
  double min_gap = room;
  for (std::size_t i = 0; i < kk; ++i) min_gap = std::min(min_gap, build.gaps[i]);
  if (!(t < min_gap))
    throw UnsupportedError("counterexample_discontinuity: t = " + numeric::format_number(t) +
                           " shifts past the interval structure (smallest gap " + numeric::format_number(min_gap) +
                           ")");
  // With t below every gap, S(t)v - v equals -4 t_k on the first
  // min(t, |I_k|) of I_k and +4 t_k just past its right end.
  double total = 0;
  for (std::size_t i = 0; i < kk; ++i) {
    total += 2 * std::min(t, build.lengths[i]) * build.phi(4 * build.tks[i]);
    out.partial_modular.push_back(total);
    if (out.crossing < 0 && total > 1) out.crossing = static_cast<int>(i + 1);
  }
  out.verdict = out.crossing > 0 ? "discontinuous" : "undecided";
  return out;
}

EngelSamples engel_R_apply(const DiagonalSystem& sys, const std::vector<double>& x, double t, double tau,
                           const std::vector<double>& grid) {
  if (!(t >= 0) || !(t <= tau)) throw PreconditionError("engel_R_apply: need 0 <= t <= tau");
  if (x.size() > sys.size()) throw PreconditionError("engel_R_apply: coefficient vector longer than the system");
  EngelSamples out;
  out.grid = grid;
  for (double r : grid) {
    if (!(r >= 0) || !(r <= tau)) throw PreconditionError("engel_R_apply: grid must lie in [0, tau]");
    std::vector<double> y(x.size(), 0.0);
    if (r > 0 && r <= t) {
      for (std::size_t n = 0; n < x.size(); ++n) y[n] = -sys.weights[n] * std::exp(sys.eigenvalues[n] * (t - r)) * x[n];
    }
    out.values.push_back(std::move(y));
  }
  return out;
}

double engel_cocycle_defect(const DiagonalSystem& sys, const std::vector<double>& x, double t, double s, double tau,
                            const std::vector<double>& grid) {
  if (!(t >= 0) || !(s >= 0) || !(t + s <= tau)) throw PreconditionError("engel_cocycle_defect: need t, s >= 0, t + s <= tau");
  std::vector<double> tsx(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) tsx[n] = std::exp(sys.eigenvalues[n] * s) * x[n];
  const auto whole = engel_R_apply(sys, x, t + s, tau, grid);
  const auto first = engel_R_apply(sys, tsx, t, tau, grid);
  // (S(t) g)(r) = g(r - t) for r > t: sample R(s)x at the shifted points.
  std::vector<double> back;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] > t) {
      back.push_back(grid[i] - t);
      where.push_back(i);
    }
  }
  const auto later = engel_R_apply(sys, x, s, tau, back);
  double worst = 0;
  std::vector<double> diff(x.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t n = 0; n < x.size(); ++n) diff[n] = whole.values[i][n] - first.values[i][n];
    if (j < where.size() && where[j] == i) {
      for (std::size_t n = 0; n < x.size(); ++n) diff[n] -= later.values[j][n];
      ++j;
    }
    worst = std::max(worst, lr_norm(diff, sys.r));
  }
  return worst;
}

SampledFunction integral_operator_L(const SampledFunction& f, double tau) {
  if (f.kind() != FunctionKind::step) throw UnsupportedError("integral_operator_L: step functions only");
  if (!std::isfinite(tau) || f.upper() != tau) throw PreconditionError("integral_operator_L: f must live on (a, tau), tau finite");
  if (f.lower() < 0) throw PreconditionError("integral_operator_L: domain must lie in (0, tau)");
  const auto& br = f.breaks();
  const auto& vals = f.values();
  const std::size_t m = vals.size();
  // tail[i] = int_{br[i]}^{tau} f(s)/s ds, for pieces away from 0.
  std::vector<double> tail(m + 1, 0.0);
  for (std::size_t i = m; i-- > 0;) {
    const double piece = vals[i] == 0 ? 0.0 : vals[i] * (std::log(br[i + 1]) - std::log(br[i]));
    tail[i] = tail[i + 1] + piece;
  }
  std::vector<double> breaks;
  std::vector<double> offsets;
  std::vector<double> slopes;
  if (f.lower() > 0) {
    breaks.push_back(0.0);
    offsets.push_back(tail[0]);
    slopes.push_back(0.0);
  }
  for (std::size_t i = 0; i < m; ++i) {
    breaks.push_back(br[i]);
    // v_i (ln b_{i+1} - ln t) + tail_{i+1}
    offsets.push_back(vals[i] * std::log(br[i + 1]) + tail[i + 1]);
    slopes.push_back(-vals[i]);
  }
  breaks.push_back(tau);
  return SampledFunction::piecewise_log(std::move(breaks), std::move(offsets), std::move(slopes));
}

double integral_operator_L_at_zero(const SampledFunction& f) {
  if (f.kind() != FunctionKind::step) throw UnsupportedError("integral_operator_L_at_zero: step functions only");
  const auto& br = f.breaks();
  const auto& vals = f.values();
  double total = 0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] == 0) continue;
    if (br[i] == 0) return vals[i] > 0 ? kInf : -kInf;
    total += vals[i] * (std::log(br[i + 1]) - std::log(br[i]));
  }
  return total;
}

LNormEstimate estimate_L_norm(const YoungFunction& phi, double tau, int trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("estimate_L_norm: need trials >= 1");
  if (!(tau > 0) || !std::isfinite(tau)) throw PreconditionError("estimate_L_norm: tau must be positive and finite");
  std::vector<SampledFunction> fs;
  fs.push_back(SampledFunction::constant(1.0, 0.0, tau));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pieces(1, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 1; k < trials; ++k) {
    const int m = pieces(rng);
    // Breakpoints on a log scale so that pieces near 0 are exercised too.
    std::vector<double> cuts;
    for (int i = 0; i + 1 < m; ++i) cuts.push_back(tau * std::pow(10.0, -4.0 * unit(rng)));
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> br{0.0};
    for (double c : cuts)
      if (c > br.back() && c < tau) br.push_back(c);
    br.push_back(tau);
    // Overall amplitude on a log scale: dilating (0, 1) to (0, tau) turns
    // Phi into tau * Phi, which only an amplitude change can absorb, so the
    // family needs every scale for its maximum to be comparable across tau.
    const double amp = std::pow(10.0, 6.0 * unit(rng) - 3.0);
    std::vector<double> vals;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) vals.push_back(unit(rng) < 0.2 ? 0.0 : amp * unit(rng));
    if (std::all_of(vals.begin(), vals.end(), [](double v) { return v == 0; })) vals.back() = 1.0;
    fs.push_back(SampledFunction::step(std::move(br), std::move(vals)));
  }
  // Profile probes c (t / tau)^{-gamma}, stepped on quarter decades down to
  // 1e-8 tau. Dilating tau maps this family into itself, which keeps the
  // maximum comparable across tau where the random draws alone are noisy.
  const auto profile = [tau](double c, double gamma) {
    std::vector<double> br{0.0}, vals;
    for (int j = 32; j >= 0; --j) br.push_back(tau * std::pow(10.0, -0.25 * j));
    vals.push_back(c * std::pow(10.0, 8.0 * gamma));
    for (int j = 31; j >= 0; --j) vals.push_back(c * std::pow(10.0, 0.25 * (j + 0.5) * gamma));
    return SampledFunction::step(std::move(br), std::move(vals));
  };
  for (double gamma : {0.0, 0.25, 0.45})
    for (int kc = -3; kc <= 3; ++kc) fs.push_back(profile(std::pow(10.0, kc), gamma));
  const auto ratio_of = [&](const SampledFunction& f) {
    SampledFunction step = f;
    if (step.kind() != FunctionKind::step) step = SampledFunction::step({0.0, tau}, {1.0});
    const double lf = luxemburg_norm(integral_operator_L(step, tau), phi).value;
    return lf / luxemburg_norm(step, phi).value;
  };
  LNormEstimate out;
  out.ratios.assign(fs.size(), 0.0);
  parallel_for(fs.size(), [&](std::size_t i) { out.ratios[i] = ratio_of(fs[i]); });
  for (std::size_t i = 0; i < out.ratios.size(); ++i) {
    if (out.ratios[i] > out.max_ratio) {
      out.max_ratio = out.ratios[i];
      out.argmax_trial = static_cast<int>(i);
    }
  }
  // Amplitude ascent on the best trial; the ratio depends on scale unless Phi
  // is a power.
  SampledFunction best = fs[static_cast<std::size_t>(out.argmax_trial)];
  if (best.kind() != FunctionKind::step) best = SampledFunction::step({0.0, tau}, {1.0});
  const auto scaled = [&best](double factor) {
    std::vector<double> v = best.values();
    for (auto& x : v) x *= factor;
    return SampledFunction::step(best.breaks(), std::move(v));
  };
  for (double step = std::pow(10.0, 0.5); step > 1.01; step = std::sqrt(step)) {
    for (int moves = 0, moved = 1; moved && moves < 40; ++moves) {
      moved = 0;
      for (double factor : {step, 1 / step}) {
        const auto cand = scaled(factor);
        const double r = ratio_of(cand);
        if (r > out.max_ratio * (1 + 1e-12)) {
          out.max_ratio = r;
          best = cand;
          moved = 1;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace orlicz
