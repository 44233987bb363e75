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
#include "orlicz/rearrange.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz {

namespace {

// Pieces of a step function as (|value|, length), zero-length pieces dropped.
std::vector<std::pair<double, double>> level_pieces(const SampledFunction& f) {
  std::vector<std::pair<double, double>> out;
  const auto& br = f.breaks();
  const auto& vals = f.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double len = br[i + 1] - br[i];
    if (len > 0) out.emplace_back(std::abs(vals[i]), len);
  }
  return out;
}

// Growth of the ratio towards an end of the grid, decade by decade.
bool grows_without_bound(const std::vector<double>& ratio, std::size_t end, int per_decade) {
  const std::size_t n = ratio.size();
  const std::size_t step = static_cast<std::size_t>(per_decade);
  if (n <= 2 * step) return false;
  const double r0 = end == 0 ? ratio[0] : ratio[n - 1];
  const double r1 = end == 0 ? ratio[step] : ratio[n - 1 - step];
  const double r2 = end == 0 ? ratio[2 * step] : ratio[n - 1 - 2 * step];
  if (!(r1 > 0) || !(r2 > 0)) return !std::isfinite(r0);
  const double last = r0 / r1;
  const double previous = r1 / r2;
  return last > 1.01 && last >= previous * (1 - 1e-9);
}

}  // namespace

double Rearrangement::distribution_at(double s) const {
  double measure = 0;
  for (const auto& [level, m] : distribution) {
    if (level > s) measure = m;
  }
  return measure;
}

double distribution_function(const SampledFunction& f, double s) {
  if (f.kind() != FunctionKind::step) throw UnsupportedError("distribution_function: step functions only");
  double measure = 0;
  for (const auto& [v, len] : level_pieces(f))
    if (v > s) measure += len;
  return measure;
}

Rearrangement decreasing_rearrangement(const SampledFunction& f) {
  Rearrangement out{f, f, {}};
  const double a = f.lower();
  const double b = f.upper();
  const double len = b - a;
  switch (f.kind()) {
    case FunctionKind::step: {
      auto pieces = level_pieces(f);
      std::stable_sort(pieces.begin(), pieces.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
      std::vector<double> breaks{0.0};
      std::vector<double> values;
      for (const auto& [v, l] : pieces) {
        if (!values.empty() && values.back() == v) {
          breaks.back() += l;
        } else {
          values.push_back(v);
          breaks.push_back(breaks.back() + l);
        }
        // A piece of infinite length hides every smaller level.
        if (!std::isfinite(breaks.back())) break;
      }
      if (values.empty()) {
        out.fstar = SampledFunction::zero(0.0, std::isfinite(len) ? len : 1.0);
        return out;
      }
      for (std::size_t i = 0; i < values.size(); ++i) out.distribution.emplace_back(values[i], breaks[i + 1]);
      out.fstar = SampledFunction::step(std::move(breaks), std::move(values));
      return out;
    }
    case FunctionKind::exp:
      out.fstar = SampledFunction::exp(std::abs(f.amplitude()) * std::exp(-f.rate() * a), f.rate(), 0.0, len);
      return out;
    case FunctionKind::sequence: {
      auto modes = f.modes();
      for (auto& m : modes) m.amplitude = std::abs(m.amplitude) * std::exp(-m.rate * a);
      out.fstar = SampledFunction::sequence(std::move(modes), f.r(), 0.0, len, f.tail_bound());
      return out;
    }
    case FunctionKind::power: {
      const double amp = std::abs(f.amplitude());
      if (f.norm_nonincreasing()) {
        out.fstar = SampledFunction::power(amp, f.center() - a, f.beta(), 0.0, len);
        return out;
      }
      const bool increasing = (f.beta() > 0 && f.center() <= a) || (f.beta() < 0 && f.center() >= b);
      if (increasing && std::isfinite(b)) {
        out.fstar = SampledFunction::power(amp, b - f.center(), f.beta(), 0.0, len);
        return out;
      }
      break;
    }
    case FunctionKind::piecewise_log:
      if (f.norm_nonincreasing() && a == 0) return out;
      break;
  }
  throw UnsupportedError("decreasing_rearrangement: unsupported input " + f.describe());
}

NormResult weak_orlicz_norm(const SampledFunction& f, const YoungFunction& phi) {
  NormResult res;
  res.rel_tol = Tolerances::golden;
  if (f.is_zero()) return res;
  const Rearrangement rr = decreasing_rearrangement(f);
  const SampledFunction& fs = rr.fstar;
  auto weight = [&phi](double t) { return phi.inverse(1.0 / t); };

  if (fs.kind() == FunctionKind::step) {
    // The weight 1/Phi^{-1}(1/t) increases in t, so each piece peaks at its
    // right end (approached from the left).
    double best = 0;
    const auto& br = fs.breaks();
    const auto& vals = fs.values();
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (vals[i] == 0) continue;
      const double w = weight(br[i + 1]);
      const double ratio = w > 0 ? vals[i] / w : kInf;
      best = std::max(best, ratio);
    }
    res.value = res.lo = res.hi = best;
    res.rel_tol = 0;
    return res;
  }

  const double len = fs.length();
  const double lo = 1e-12;
  const double hi = std::min(len, 1e12);
  // Closed forms vanish outside the open domain; read the left limit at its end.
  auto eval = [&fs, len](double t) { return fs.norm_at(std::min(t, std::nextafter(len, 0.0))); };
  auto ratio_at = [&](double t) {
    const double w = weight(t);
    return w > 0 ? eval(t) / w : kInf;
  };
  constexpr int per_decade = 64;
  const auto grid = numeric::log_grid_per_decade(lo, hi, per_decade);
  std::vector<double> ratio(grid.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ratio[i] = ratio_at(grid[i]);
    if (ratio[i] > ratio[best]) best = i;
  }
  double value = ratio[best];
  if (best == 0 && grows_without_bound(ratio, 0, per_decade)) value = kInf;
  if (best + 1 == grid.size() && !std::isfinite(len) && grows_without_bound(ratio, 1, per_decade)) value = kInf;
  if (std::isfinite(value) && best > 0 && best + 1 < grid.size()) {
    const auto e = numeric::golden_max_log(ratio_at, grid[best - 1], grid[best + 1]);
    value = std::max(value, e.value);
    res.diagnostics.iterations = e.evaluations;
  }
  res.value = res.lo = res.hi = value;
  res.diagnostics.panels = static_cast<int>(grid.size());
  return res;
}

HardyLittlewood hardy_littlewood_check(const SampledFunction& f, const SampledFunction& g) {
  if (f.kind() != FunctionKind::step || g.kind() != FunctionKind::step)
    throw UnsupportedError("hardy_littlewood_check: step functions only");
  auto pairing = [](const SampledFunction& x, const SampledFunction& y) {
    const auto br = merge_breaks(x.breaks(), y.breaks());
    double total = 0;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
      const double len = br[i + 1] - br[i];
      if (!(len > 0)) continue;
      const double mid = std::isfinite(br[i + 1]) ? 0.5 * (br[i] + br[i + 1]) : br[i] + 1.0;
      const double prod = x.norm_at(mid) * y.norm_at(mid);
      if (prod != 0) total += prod * len;
    }
    return total;
  };
  HardyLittlewood out;
  out.lhs = pairing(f, g);
  out.rhs = pairing(decreasing_rearrangement(f).fstar, decreasing_rearrangement(g).fstar);
  const double scale = std::max(std::abs(out.lhs), std::abs(out.rhs));
  out.slack = scale > 0 ? (out.rhs - out.lhs) / scale : 0.0;
  return out;
}

}  // namespace orlicz
