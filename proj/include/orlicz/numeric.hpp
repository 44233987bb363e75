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
#ifndef ORLICZ_NUMERIC_HPP
#define ORLICZ_NUMERIC_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace orlicz {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Error hierarchy shared by all modules.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : Error {
  using Error::Error;
};
struct UnsupportedError : Error {
  using Error::Error;
};
struct ConstructionError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Centralised default tolerances.
struct Tolerances {
  static constexpr double bisection = 1e-9;
  static constexpr double quadrature = 1e-12;
  static constexpr double inequality_slack = 1e-8;
  static constexpr double golden = 1e-10;
  static constexpr double inverse = 1e-12;
};

namespace numeric {

// Shortest round-trip decimal representation.
inline std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

struct Extremum {
  double arg = 0;
  double value = -kInf;
  int evaluations = 0;
};

// Golden-section maximisation of a unimodal f on [lo, hi].  Stops when the
// bracket is narrower than rel_tol * |centre| (or abs_tol) or when the
// comparisons can no longer distinguish the probes.
template <class F>
Extremum golden_max(F&& f, double lo, double hi, double rel_tol = Tolerances::golden,
                    double abs_tol = 0.0, int max_iter = 300) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  int evals = 2;
  for (int i = 0; i < max_iter; ++i) {
    const double width = hi - lo;
    if (width <= rel_tol * std::abs(0.5 * (lo + hi)) || width <= abs_tol) break;
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      if (c == d) break;
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      if (c == d) break;
      fd = f(d);
    }
    ++evals;
  }
  return fc >= fd ? Extremum{c, fc, evals} : Extremum{d, fd, evals};
}

// Golden-section maximisation over log x for x in [lo, hi], lo > 0.
template <class F>
Extremum golden_max_log(F&& f, double lo, double hi, double rel_tol = Tolerances::golden) {
  auto g = [&](double u) { return f(std::exp(u)); };
  Extremum e = golden_max(g, std::log(lo), std::log(hi), 0.0, rel_tol);
  e.arg = std::exp(e.arg);
  return e;
}

// `n` points log-spaced over [lo, hi], inclusive.
inline std::vector<double> log_grid(double lo, double hi, int n) {
  if (n < 1 || !(lo > 0) || !(hi >= lo)) throw PreconditionError("log_grid: need 0 < lo <= hi, n >= 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / (n - 1);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::exp(a + step * i);
  out.back() = hi;
  return out;
}

// Log-spaced grid with a fixed density per decade.
inline std::vector<double> log_grid_per_decade(double lo, double hi, int per_decade) {
  const int n = std::max(2, static_cast<int>(std::ceil(std::log10(hi / lo) * per_decade)) + 1);
  return log_grid(lo, hi, n);
}

// t = 2^k for k = -depth..depth.
inline std::vector<double> dyadic_grid(int depth) {
  std::vector<double> out;
  for (int k = -depth; k <= depth; ++k) out.push_back(std::ldexp(1.0, k));
  return out;
}

// Dense log scan followed by golden refinement of the best interior point.
// Handles mildly multimodal objectives as long as the modes are separated
// by more than the scan spacing.  `at_boundary` reports whether the best
// scan point was an endpoint of the range.
struct ScanResult {
  Extremum best;
  bool at_lower = false;
  bool at_upper = false;
};

template <class F>
ScanResult scan_max_log(F&& f, double lo, double hi, int per_decade,
                        double rel_tol = Tolerances::golden) {
  const auto grid = log_grid_per_decade(lo, hi, per_decade);
  std::vector<double> vals(grid.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = f(grid[i]);
    if (vals[i] > vals[best]) best = i;
  }
  ScanResult out;
  out.best = {grid[best], vals[best], static_cast<int>(grid.size())};
  out.at_lower = best == 0;
  out.at_upper = best + 1 == grid.size();
  if (!out.at_lower && !out.at_upper) {
    Extremum e = golden_max_log(f, grid[best - 1], grid[best + 1], rel_tol);
    e.evaluations += out.best.evaluations;
    if (e.value >= out.best.value) out.best = e;
  }
  return out;
}

// Certified bracket for the solution of g(x) = target with g nondecreasing in
// x > 0: g(lo) < target <= g(hi) and hi/lo - 1 <= rel_tol on exit.
struct RootBracket {
  double lo = 0;
  double hi = 0;
  int iterations = 0;
  double mid() const { return std::sqrt(lo * hi); }
};

template <class G>
RootBracket solve_increasing(G&& g, double target, double x0 = 1.0,
                             double rel_tol = Tolerances::inverse, int max_iter = 2000) {
  if (!(x0 > 0) || !std::isfinite(x0)) x0 = 1.0;
  RootBracket b;
  double x = x0;
  if (g(x) >= target) {
    double y = x;
    while (g(y) >= target) {
      x = y;
      y *= 0.5;
      if (++b.iterations > max_iter || y == 0) throw Error("solve_increasing: no lower bracket");
    }
    b.lo = y;
    b.hi = x;
  } else {
    double y = x;
    while (g(y) < target) {
      x = y;
      y *= 2.0;
      if (++b.iterations > max_iter || !std::isfinite(y)) throw Error("solve_increasing: no upper bracket");
    }
    b.lo = x;
    b.hi = y;
  }
  while (b.hi / b.lo - 1.0 > rel_tol && b.iterations < max_iter) {
    const double m = std::sqrt(b.lo * b.hi);
    if (m <= b.lo || m >= b.hi) break;
    if (g(m) >= target)
      b.hi = m;
    else
      b.lo = m;
    ++b.iterations;
  }
  return b;
}

// Certified bracket for the level where a nonincreasing m(x) > 0 drops to
// one: m(lo) > 1 >= m(hi), hi/lo - 1 <= rel_tol.  Regula falsi (Illinois) on
// log m against log x, which is exactly linear for power-like m; each secant
// point is followed by a probe just across it so that both ends close
// together.  Falls back to bisection when m is infinite or zero at an end or
// the secant stalls.
template <class M>
RootBracket solve_unit_level(M&& m, double x0 = 1.0, double rel_tol = Tolerances::bisection,
                             int max_iter = 2000) {
  if (!(x0 > 0) || !std::isfinite(x0)) x0 = 1.0;
  RootBracket b;
  auto F = [&m](double u) { return std::log(m(std::exp(u))); };
  double u = std::log(x0);
  double fu = F(u);
  double ul, uh, fl, fh;
  if (fu > 0) {
    ul = u, fl = fu;
    uh = u + std::log(2.0);
    fh = F(uh);
    while (fh > 0) {
      ul = uh, fl = fh;
      uh += std::log(2.0);
      fh = F(uh);
      if (++b.iterations > max_iter || !std::isfinite(uh)) throw Error("solve_unit_level: no upper bracket");
    }
  } else {
    uh = u, fh = fu;
    ul = u - std::log(2.0);
    fl = F(ul);
    while (!(fl > 0)) {
      uh = ul, fh = fl;
      ul -= std::log(2.0);
      fl = F(ul);
      if (++b.iterations > max_iter || !std::isfinite(ul)) throw Error("solve_unit_level: no lower bracket");
    }
  }
  const double ltol = std::log1p(rel_tol);
  int side = 0;  // Illinois bookkeeping: which end was kept last time
  double prev_width = uh - ul;
  while (uh - ul > ltol && b.iterations < max_iter) {
    ++b.iterations;
    const double width = uh - ul;
    double cand;
    const bool usable = std::isfinite(fl) && std::isfinite(fh) && fl > fh;
    if (usable && width < 0.75 * prev_width + ltol) {
      cand = ul + fl * (uh - ul) / (fl - fh);
    } else {
      cand = 0.5 * (ul + uh);
    }
    prev_width = width;
    const double margin = 0.45 * ltol;
    cand = std::min(std::max(cand, ul + margin), uh - margin);
    if (!(cand > ul && cand < uh)) break;
    const double fc = F(cand);
    if (fc > 0) {
      ul = cand, fl = fc;
      if (side == -1 && std::isfinite(fh)) fh *= 0.5;
      side = -1;
      // Probe just above the new lower end.
      const double probe = cand + 0.9 * ltol;
      if (probe < uh) {
        const double fp = F(probe);
        if (fp > 0)
          ul = probe, fl = fp;
        else
          uh = probe, fh = fp, side = 0;
      }
    } else {
      uh = cand, fh = fc;
      if (side == 1 && std::isfinite(fl)) fl *= 0.5;
      side = 1;
      const double probe = cand - 0.9 * ltol;
      if (probe > ul) {
        const double fp = F(probe);
        if (fp > 0)
          ul = probe, fl = fp, side = 0;
        else
          uh = probe, fh = fp;
      }
    }
  }
  b.lo = std::exp(ul);
  b.hi = std::exp(uh);
  return b;
}

struct QuadResult {
  double value = 0;
  double error = 0;
  int panels = 0;
};

// One Gauss-Kronrod (7/15) panel on [a, b].  The library's non-adaptive
// routine reports its error on the reference interval, so both the error
// and the L1 mass are rescaled by the half-width here.
template <class G>
QuadResult gk_panel(const G& g, double a, double b) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double err = 0;
  double l1 = 0;
  const std::function<double(double)> ref = [&g, half, mid](double x) { return g(half * x + mid); };
  QuadResult r;
  r.value = half * GK::integrate(ref, -1.0, 1.0, 0, 0.0, &err, &l1);
  r.error = half * err;
  r.panels = 1;
  return r;
}

// Globally adaptive Gauss-Kronrod on [a, b]: the panel with the largest error
// is bisected until the summed error falls below rel_tol * |value| (or a
// small multiple of rounding in the L1 mass), or the panel budget runs out.
template <class F>
QuadResult integrate(F&& f, double a, double b, double rel_tol = Tolerances::quadrature,
                     int max_panels = 4000) {
  QuadResult total;
  if (!(b > a)) return total;
  struct Panel {
    double a, b;
    QuadResult q;
    double mass;
  };
  auto make = [&f](double lo, double hi) {
    const QuadResult q = gk_panel(f, lo, hi);
    return Panel{lo, hi, q, std::abs(q.value)};
  };
  auto cmp = [](const Panel& x, const Panel& y) { return x.q.error < y.q.error; };
  std::vector<Panel> heap{make(a, b)};
  double value = heap[0].q.value;
  double error = heap[0].q.error;
  double mass = heap[0].mass;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  while (static_cast<int>(heap.size()) < max_panels) {
    if (!std::isfinite(value)) break;
    if (error <= std::max(rel_tol * std::abs(value), 50.0 * eps * mass)) break;
    std::pop_heap(heap.begin(), heap.end(), cmp);
    const Panel worst = heap.back();
    heap.pop_back();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(m > worst.a && m < worst.b)) {
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end(), cmp);
      break;
    }
    Panel left = make(worst.a, m);
    Panel right = make(m, worst.b);
    value += left.q.value + right.q.value - worst.q.value;
    error += left.q.error + right.q.error - worst.q.error;
    mass += left.mass + right.mass - worst.mass;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), cmp);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), cmp);
  }
  // Resum to shed the drift of the running updates.
  total.value = 0;
  total.error = 0;
  for (const Panel& p : heap) {
    total.value += p.q.value;
    total.error += p.q.error;
  }
  total.panels = static_cast<int>(heap.size());
  return total;
}

// Integrate over consecutive panels given by sorted breakpoints.
template <class F>
QuadResult integrate_panels(F&& f, const std::vector<double>& breaks,
                            double rel_tol = Tolerances::quadrature) {
  QuadResult total;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    const QuadResult q = integrate(f, breaks[i], breaks[i + 1], rel_tol);
    total.value += q.value;
    total.error += q.error;
    total.panels += 1;
  }
  return total;
}

}  // namespace numeric
}  // namespace orlicz

#endif
