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
#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace orlicz {

namespace {

// int_{x2}^{x1} Phi(v)/v dv over dyadic panels, 0 < x2 < x1.
double log_modular_between(const YoungFunction& phi, double x2, double x1, double tol, int& panels) {
  auto g = [&phi](double v) { return phi(v) / v; };
  double total = 0;
  double hi = x1;
  while (hi > x2) {
    const double lo = std::max(x2, 0.5 * hi);
    total += numeric::integrate(g, lo, hi, tol).value;
    ++panels;
    hi = lo;
  }
  return total;
}

// int over t = c + dir * w * e^{-u}, u in (0, inf), for integrands with an
// integrable singularity at c.
double integrate_towards(const std::function<double(double)>& g, double c, double w, int dir, double tol,
                         int& panels) {
  auto h = [&](double u) {
    const double e = w * std::exp(-u);
    const double t = c + dir * e;
    if (t == c) return 0.0;
    return g(t) * e;
  };
  double total = numeric::integrate(h, 0.0, 1.0, tol).value;
  ++panels;
  double u = 1.0;
  while (u < 745) {
    const double piece = numeric::integrate(h, u, 2 * u, tol).value;
    ++panels;
    if (!std::isfinite(piece)) return kInf;
    total += piece;
    u *= 2;
    if (u >= 32 && std::abs(piece) <= 1e-17 * std::abs(total)) break;
  }
  return total;
}

ModularResult modular_step(const SampledFunction& f, const YoungFunction& phi, double k) {
  ModularResult res;
  const auto& br = f.breaks();
  const auto& v = f.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const double len = br[i + 1] - br[i];
    res.value += len * phi(std::abs(v[i]) / k);
    ++res.diagnostics.panels;
  }
  return res;
}

ModularResult modular_exp(const SampledFunction& f, const YoungFunction& phi, double k, double tol) {
  ModularResult res;
  const double A = std::abs(f.amplitude());
  const double sigma = f.rate();
  if (sigma == 0) {
    res.value = f.length() * phi(A / k);
    res.diagnostics.panels = 1;
    return res;
  }
  const double x1 = A * std::exp(-sigma * f.lower()) / k;
  if (!std::isfinite(phi(x1))) {
    res.value = kInf;
    return res;
  }
  if (std::isfinite(f.upper())) {
    const double x2 = A * std::exp(-sigma * f.upper()) / k;
    if (x2 > 0) {
      res.value = log_modular_between(phi, x2, x1, tol, res.diagnostics.panels) / sigma;
      return res;
    }
  }
  res.value = log_modular(phi, x1, tol) / sigma;
  return res;
}

ModularResult modular_sequence(const SampledFunction& f, const YoungFunction& phi, double k, double tol) {
  ModularResult res;
  double rmax = 0;
  for (const auto& m : f.modes())
    if (m.amplitude != 0) rmax = std::max(rmax, m.rate);
  const double rmin = f.min_rate();
  const double a = f.lower(), b = f.upper();
  if (!std::isfinite(b) && rmin == 0) {
    res.value = kInf;
    return res;
  }
  auto g = [&](double t) { return phi(f.norm_at(t) / k); };
  double h = rmax > 0 ? 1.0 / rmax : b - a;
  if (std::isfinite(b)) h = std::min(h, b - a);
  double x = a;
  for (int i = 0; i < 4000; ++i) {
    const double next = std::isfinite(b) ? std::min(b, x + h) : x + h;
    const double piece = numeric::integrate(g, x, next, tol).value;
    ++res.diagnostics.panels;
    if (!std::isfinite(piece)) {
      res.value = kInf;
      return res;
    }
    res.value += piece;
    x = next;
    if (x >= b) break;
    if (rmin > 0) {
      // For t >= x every coordinate decays at least like e^{-rmin (t - x)},
      // so the rest is at most Phi(||f(x)||/k) / rmin by convexity.
      const double tail = phi(f.norm_at(x) / k) / rmin;
      if (tail <= 1e-15 + 1e-13 * res.value) {
        res.diagnostics.truncation = x;
        res.diagnostics.tail_bound = tail;
        break;
      }
    }
    h *= 2;
  }
  return res;
}

ModularResult modular_power(const SampledFunction& f, const YoungFunction& phi, double k, double tol) {
  ModularResult res;
  if (!std::isfinite(f.upper())) throw UnsupportedError("modular: power kind needs a finite domain");
  std::function<double(double)> g = [&](double t) { return phi(f.norm_at(t) / k); };
  const double a = f.lower(), b = f.upper(), c = f.center();
  const bool singular = f.beta() < 0;
  auto segment = [&](double lo, double hi) {
    if (!singular) return numeric::integrate(g, lo, hi, tol).value;
    // Split so that the singular end is handled by the exponential map.
    if (lo == c) return integrate_towards(g, lo, hi - lo, +1, tol, res.diagnostics.panels);
    if (hi == c) return integrate_towards(g, hi, hi - lo, -1, tol, res.diagnostics.panels);
    return numeric::integrate(g, lo, hi, tol).value;
  };
  if (c > a && c < b)
    res.value = segment(a, c) + segment(c, b);
  else
    res.value = segment(a, b);
  ++res.diagnostics.panels;
  return res;
}

ModularResult modular_log(const SampledFunction& f, const YoungFunction& phi, double k, double tol) {
  ModularResult res;
  if (!std::isfinite(f.upper())) throw UnsupportedError("modular: piecewise-log kind needs a finite domain");
  const auto& br = f.breaks();
  for (std::size_t i = 0; i + 1 < br.size(); ++i) {
    const double off = f.values()[i], sl = f.slopes()[i];
    if (off == 0 && sl == 0) continue;
    std::function<double(double)> g = [&](double t) { return phi(std::abs(off + sl * std::log(t)) / k); };
    double piece;
    if (br[i] == 0 && sl != 0) {
      piece = integrate_towards(g, 0.0, br[i + 1], +1, tol, res.diagnostics.panels);
    } else {
      piece = numeric::integrate(g, br[i], br[i + 1], tol).value;
      ++res.diagnostics.panels;
    }
    if (!std::isfinite(piece)) {
      res.value = kInf;
      return res;
    }
    res.value += piece;
  }
  return res;
}

}  // namespace

double log_modular(const YoungFunction& phi, double w, double quad_tol) {
  if (!(w > 0)) return 0.0;
  auto g = [&phi](double v) { return phi(v) / v; };
  double total = 0;
  double hi = w;
  for (int j = 0; j < 3000; ++j) {
    const double lo = 0.5 * hi;
    total += numeric::integrate(g, lo, hi, quad_tol).value;
    hi = lo;
    // Phi(v)/v is nondecreasing, so the remainder is at most Phi(hi).
    if (phi(hi) <= 1e-17 * total || hi < 1e-300) break;
  }
  return total;
}

ModularResult modular_detailed(const SampledFunction& f, const YoungFunction& phi, double k, double quad_tol) {
  if (!(k > 0)) throw PreconditionError("modular: k must be positive");
  if (f.is_zero()) return {};
  switch (f.kind()) {
    case FunctionKind::step:
      return modular_step(f, phi, k);
    case FunctionKind::exp:
      return modular_exp(f, phi, k, quad_tol);
    case FunctionKind::sequence:
      return modular_sequence(f, phi, k, quad_tol);
    case FunctionKind::power:
      return modular_power(f, phi, k, quad_tol);
    case FunctionKind::piecewise_log:
      return modular_log(f, phi, k, quad_tol);
  }
  return {};
}

double modular(const SampledFunction& f, const YoungFunction& phi, double k) {
  return modular_detailed(f, phi, k).value;
}

NormResult luxemburg_norm(const SampledFunction& f, const YoungFunction& phi, const NormOptions& opts) {
  NormResult res;
  res.rel_tol = opts.rel_tol;
  if (f.is_zero()) return res;
  const double ess = f.ess_sup();
  const double len = f.length();
  double k0 = 1.0;
  if (std::isfinite(ess) && std::isfinite(len) && ess > 0) k0 = ess / phi.inverse(1.0 / len);
  if (!(k0 > 0) || !std::isfinite(k0)) k0 = 1.0;
  ModularResult last;
  auto m = [&](double k) {
    last = modular_detailed(f, phi, k, opts.quad_tol);
    return last.value;
  };
  const numeric::RootBracket br = numeric::solve_unit_level(m, k0, opts.rel_tol);
  res.lo = br.lo;
  res.hi = br.hi;
  res.value = br.mid();
  res.diagnostics = modular_detailed(f, phi, br.hi, opts.quad_tol).diagnostics;
  res.diagnostics.iterations = br.iterations;
  return res;
}

NormResult exp_norm(double s, const YoungFunction& phi, const NormOptions& opts) {
  if (!(s > 0) || !std::isfinite(s)) throw PreconditionError("exp_norm: s must be positive");
  // Modular at level k is H(1/k)/s with H(w) = int_0^w Phi(v)/v dv, so the
  // norm is 1/w for the root of H(w) = s.
  auto H = [&](double w) { return log_modular(phi, w, opts.quad_tol); };
  NormResult res;
  res.rel_tol = opts.rel_tol;
  double w = phi.inverse(s);
  if (!(w > 0) || !std::isfinite(w)) w = 1.0;
  double hw = H(w);
  double wl = 0, wh = 0;
  int it = 0;
  if (hw < s) {
    wl = w;
    wh = 2 * w;
    while (H(wh) < s) {
      wl = wh;
      wh *= 2;
      if (++it > 2000) throw Error("exp_norm: no upper bracket");
    }
  } else {
    wh = w;
    wl = 0.5 * w;
    while (H(wl) >= s) {
      wh = wl;
      wl *= 0.5;
      if (++it > 2000) throw Error("exp_norm: no lower bracket");
    }
  }
  // Safeguarded Newton on u = log w, using dH/du = Phi(w).
  w = std::sqrt(wl * wh);
  while (wh / wl - 1 > opts.rel_tol && it < 500) {
    ++it;
    hw = H(w);
    if (hw < s)
      wl = w;
    else
      wh = w;
    const double slope = phi(w);
    double next = slope > 0 ? w * std::exp((s - hw) / slope) : 0.0;
    if (!(next > wl && next < wh)) next = std::sqrt(wl * wh);
    if (std::abs(std::log(next / w)) < 0.25 * opts.rel_tol) {
      // Converged: certify a tight bracket around the Newton point.
      const double lo = next * (1 - 0.4 * opts.rel_tol), hi = next * (1 + 0.4 * opts.rel_tol);
      if (lo > wl && H(lo) < s) wl = lo;
      if (hi < wh && H(hi) >= s) wh = hi;
      w = std::sqrt(wl * wh);
      if (wh / wl - 1 > opts.rel_tol) continue;
      break;
    }
    w = next;
  }
  res.lo = 1.0 / wh;
  res.hi = 1.0 / wl;
  res.value = 1.0 / std::sqrt(wl * wh);
  res.diagnostics.iterations = it;
  return res;
}

double step_lp_norm(const SampledFunction& f, double p) {
  if (f.kind() != FunctionKind::step) throw UnsupportedError("step_lp_norm: step functions only");
  double sum = 0;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    const double v = f.values()[i];
    if (v == 0) continue;
    sum += std::pow(std::abs(v), p) * (f.breaks()[i + 1] - f.breaks()[i]);
  }
  return std::pow(sum, 1.0 / p);
}

namespace {

// Finite partition on which witness step functions live.
std::vector<double> witness_partition(const SampledFunction& f) {
  if (f.kind() == FunctionKind::step) return f.breaks();
  const double a = f.lower();
  double T = f.upper();
  if (!std::isfinite(T)) {
    const double top = f.ess_sup();
    double h = 1.0;
    T = a + h;
    while (f.norm_at(T) > 1e-10 * top && T < 1e6) {
      h *= 2;
      T = a + h;
    }
  }
  std::vector<double> out;
  const int n = 64;
  for (int i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) / n;
    out.push_back(a + (T - a) * x * x);
  }
  for (double c : f.breakpoints())
    if (c > a && c < T) out.push_back(c);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

OrliczBounds orlicz_norm_bounds(const SampledFunction& f, const YoungFunction& phi, int witnesses,
                                std::uint64_t seed) {
  if (witnesses < 1) throw PreconditionError("orlicz_norm_bounds: need at least one witness");
  OrliczBounds out;
  if (f.is_zero()) {
    out.best_witness = "zero";
    return out;
  }
  const NormResult lux = luxemburg_norm(f, phi);
  out.luxemburg = lux.value;
  out.hi = 2 * lux.value;
  const YoungFunction phit = complementary(phi);

  auto evaluate = [&](const std::vector<double>& part, const std::vector<double>& gvals,
                      const std::vector<double>& ints) {
    double num = 0;
    std::vector<double> vals(gvals.size());
    for (std::size_t i = 0; i < gvals.size(); ++i) {
      // A positive value on an unbounded piece has infinite conjugate norm.
      vals[i] = std::isfinite(part[i + 1]) ? gvals[i] : 0.0;
      num += vals[i] * ints[i];
    }
    const SampledFunction g = SampledFunction::step(part, vals);
    if (g.is_zero()) return 0.0;
    return num / luxemburg_norm(g, phit).hi;
  };
  auto piece_integrals = [&](const std::vector<double>& part) {
    std::vector<double> ints;
    for (std::size_t i = 0; i + 1 < part.size(); ++i) ints.push_back(integrate_norm(f, part[i], part[i + 1]));
    return ints;
  };
  auto consider = [&](double v, const char* name) {
    if (v > out.lo) {
      out.lo = v;
      out.best_witness = name;
    }
  };

  const std::vector<double> part = witness_partition(f);
  const std::vector<double> ints = piece_integrals(part);
  std::vector<double> avg(ints.size());
  double top = 0;
  for (std::size_t i = 0; i < ints.size(); ++i) {
    const double len = part[i + 1] - part[i];
    avg[i] = std::isfinite(len) ? ints[i] / len : 0.0;
    top = std::max(top, avg[i]);
  }

  std::vector<double> young(avg.size()), level(avg.size());
  for (std::size_t i = 0; i < avg.size(); ++i) {
    young[i] = avg[i] > 0 ? phi.derivative(avg[i] / lux.value) : 0.0;
    level[i] = avg[i] >= top * (1 - 1e-12) ? 1.0 : 0.0;
  }
  consider(evaluate(part, young, ints), "young-equality");
  consider(evaluate(part, level, ints), "level-set");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int w = 0; w < witnesses; ++w) {
    std::vector<double> refined = part;
    const double lo = part.front();
    double hi = part.back();
    if (!std::isfinite(hi)) hi = part.size() > 2 ? part[part.size() - 2] : lo + 1.0;
    for (int j = 0; j < 8; ++j) refined.push_back(lo + (hi - lo) * unit(rng));
    std::sort(refined.begin(), refined.end());
    refined.erase(std::unique(refined.begin(), refined.end()), refined.end());
    std::vector<double> vals(refined.size() - 1);
    for (double& v : vals) v = unit(rng);
    consider(evaluate(refined, vals, piece_integrals(refined)), "random-step");
  }
  out.slack = out.luxemburg > 0 ? 1.0 - out.lo / out.luxemburg : 0.0;
  return out;
}

namespace {

double integrate_product(const SampledFunction& f, const SampledFunction& g) {
  const double a = std::max(f.lower(), g.lower());
  const double b = std::min(f.upper(), g.upper());
  if (!(b > a)) return 0.0;
  if (f.kind() == FunctionKind::step && g.kind() == FunctionKind::step) {
    const auto br = merge_breaks(f.breaks(), g.breaks());
    double sum = 0;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
      const double l = std::max(a, br[i]), h = std::min(b, br[i + 1]);
      if (!(h > l)) continue;
      const double mid = std::isfinite(h) ? 0.5 * (l + h) : l + 1.0;
      const double prod = f.norm_at(mid) * g.norm_at(mid);
      if (prod != 0) sum += prod * (h - l);
    }
    return sum;
  }
  auto h = [&](double t) { return f.norm_at(t) * g.norm_at(t); };
  std::vector<double> pts{a};
  for (double x : merge_breaks(f.breakpoints(), g.breakpoints()))
    if (x > a && x < b) pts.push_back(x);
  if (std::isfinite(b)) {
    pts.push_back(b);
    return numeric::integrate_panels(h, pts, 1e-12).value;
  }
  double total = numeric::integrate_panels(h, pts, 1e-12).value;
  double x = pts.back(), step = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double piece = numeric::integrate(h, x, x + step, 1e-12).value;
    total += piece;
    x += step;
    step *= 1.5;
    if (piece <= 1e-17 * total && i > 8) break;
  }
  return total;
}

}  // namespace

InequalityVerdict check_hoelder(const SampledFunction& f, const SampledFunction& g, const YoungFunction& phi) {
  InequalityVerdict v;
  v.lhs = integrate_product(f, g);
  if (v.lhs == 0) return v;
  const YoungFunction phit = complementary(phi);
  v.rhs = 2 * luxemburg_norm(f, phi).value * luxemburg_norm(g, phit).value;
  v.ratio = v.rhs > 0 ? v.lhs / v.rhs : kInf;
  v.holds = v.ratio <= 1 + 1e-8;
  return v;
}

InequalityVerdict check_minkowski(const Step2D& f, const YoungFunction& phi, double r) {
  if (!(r >= 1) || !std::isfinite(r)) throw PreconditionError("check_minkowski: need 1 <= r < inf");
  const auto psi = [&phi, r](double t) { return phi(std::pow(t, 1.0 / r)); };
  const YoungValidation val = validate_convex_increasing(psi);
  if (!val.ok) throw UnsupportedError("check_minkowski: Phi(t^{1/r}) is not convex: " + val.failures.front());
  const std::size_t nx = f.x_breaks.size(), ny = f.y_breaks.size();
  if (nx < 2 || ny < 2 || f.values.size() != nx - 1) throw PreconditionError("check_minkowski: malformed grid");
  for (std::size_t j = 0; j + 1 < ny; ++j)
    if (!(f.y_breaks[j + 1] > f.y_breaks[j]) || !std::isfinite(f.y_breaks[j + 1]))
      throw PreconditionError("check_minkowski: y breakpoints must be finite and increasing");
  std::vector<double> inner(nx - 1, 0.0);
  for (std::size_t i = 0; i + 1 < nx; ++i) {
    if (f.values[i].size() != ny - 1) throw PreconditionError("check_minkowski: malformed row");
    for (std::size_t j = 0; j + 1 < ny; ++j) {
      if (f.values[i][j] < 0) throw PreconditionError("check_minkowski: values must be nonnegative");
      inner[i] += std::pow(f.values[i][j], r) * (f.y_breaks[j + 1] - f.y_breaks[j]);
    }
    inner[i] = std::pow(inner[i], 1.0 / r);
  }
  InequalityVerdict v;
  v.lhs = luxemburg_norm(SampledFunction::step(f.x_breaks, inner), phi).value;
  double sum = 0;
  for (std::size_t j = 0; j + 1 < ny; ++j) {
    std::vector<double> col(nx - 1);
    for (std::size_t i = 0; i + 1 < nx; ++i) col[i] = f.values[i][j];
    const double n = luxemburg_norm(SampledFunction::step(f.x_breaks, col), phi).value;
    sum += std::pow(n, r) * (f.y_breaks[j + 1] - f.y_breaks[j]);
  }
  v.rhs = std::pow(2.0, 1.0 / r) * std::pow(sum, 1.0 / r);
  v.ratio = v.rhs > 0 ? v.lhs / v.rhs : (v.lhs > 0 ? kInf : 0.0);
  v.holds = v.ratio <= 1 + 1e-8;
  return v;
}

}  // namespace orlicz
