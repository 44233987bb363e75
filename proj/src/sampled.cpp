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
#include "orlicz/sampled.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz {

using numeric::format_number;

namespace {

void check_breaks(const std::vector<double>& breaks, const char* what) {
  if (breaks.size() < 2) throw PreconditionError(std::string(what) + ": need at least one piece");
  if (!std::isfinite(breaks.front())) throw PreconditionError(std::string(what) + ": first breakpoint must be finite");
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (!(breaks[i + 1] > breaks[i]))
      throw PreconditionError(std::string(what) + ": breakpoints must be strictly increasing");
}

std::size_t piece_of(const std::vector<double>& breaks, double t) {
  const auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
  return static_cast<std::size_t>(it - breaks.begin()) - 1;
}

}  // namespace

SampledFunction SampledFunction::step(std::vector<double> breaks, std::vector<double> values) {
  check_breaks(breaks, "step");
  if (values.size() + 1 != breaks.size()) throw PreconditionError("step: need one value per piece");
  for (double v : values)
    if (!std::isfinite(v)) throw PreconditionError("step: values must be finite");
  SampledFunction f;
  f.kind_ = FunctionKind::step;
  f.a_ = breaks.front();
  f.b_ = breaks.back();
  f.breaks_ = std::move(breaks);
  f.values_ = std::move(values);
  return f;
}

SampledFunction SampledFunction::exp(double amplitude, double rate, double a, double b) {
  if (!(b > a) || !std::isfinite(a)) throw PreconditionError("exp: need a finite lower end below the upper end");
  if (!(rate >= 0) || !std::isfinite(rate) || !std::isfinite(amplitude))
    throw PreconditionError("exp: rate must be finite and nonnegative");
  if (!std::isfinite(b) && rate == 0 && amplitude != 0)
    throw PreconditionError("exp: a nonzero constant needs a finite domain");
  SampledFunction f;
  f.kind_ = FunctionKind::exp;
  f.a_ = a;
  f.b_ = b;
  f.amplitude_ = amplitude;
  f.rate_ = rate;
  return f;
}

SampledFunction SampledFunction::power(double amplitude, double center, double beta, double a, double b) {
  if (!(b > a) || !std::isfinite(a)) throw PreconditionError("power: need a finite lower end below the upper end");
  if (!std::isfinite(amplitude) || !std::isfinite(center) || !std::isfinite(beta))
    throw PreconditionError("power: parameters must be finite");
  SampledFunction f;
  f.kind_ = FunctionKind::power;
  f.a_ = a;
  f.b_ = b;
  f.amplitude_ = amplitude;
  f.center_ = center;
  f.beta_ = beta;
  return f;
}

SampledFunction SampledFunction::sequence(std::vector<ExpMode> modes, double r, double a, double b,
                                          double tail_bound) {
  if (!(b > a) || !std::isfinite(a)) throw PreconditionError("sequence: need a finite lower end below the upper end");
  if (!(r >= 1) || !std::isfinite(r)) throw PreconditionError("sequence: need 1 <= r < inf");
  if (!(tail_bound >= 0)) throw PreconditionError("sequence: tail bound must be nonnegative");
  for (const auto& m : modes)
    if (!(m.rate >= 0) || !std::isfinite(m.rate) || !std::isfinite(m.amplitude))
      throw PreconditionError("sequence: rates must be finite and nonnegative");
  SampledFunction f;
  f.kind_ = FunctionKind::sequence;
  f.a_ = a;
  f.b_ = b;
  f.modes_ = std::move(modes);
  f.r_ = r;
  f.tail_bound_ = tail_bound;
  return f;
}

SampledFunction SampledFunction::piecewise_log(std::vector<double> breaks, std::vector<double> offsets,
                                               std::vector<double> slopes) {
  check_breaks(breaks, "piecewise_log");
  if (breaks.front() < 0) throw PreconditionError("piecewise_log: domain must lie in [0, inf)");
  if (offsets.size() + 1 != breaks.size() || slopes.size() + 1 != breaks.size())
    throw PreconditionError("piecewise_log: need one offset and slope per piece");
  SampledFunction f;
  f.kind_ = FunctionKind::piecewise_log;
  f.a_ = breaks.front();
  f.b_ = breaks.back();
  f.breaks_ = std::move(breaks);
  f.values_ = std::move(offsets);
  f.slopes_ = std::move(slopes);
  return f;
}

double SampledFunction::value(double t) const {
  if (!(t > a_) || !(t < b_)) return 0.0;
  switch (kind_) {
    case FunctionKind::step:
      return values_[piece_of(breaks_, t)];
    case FunctionKind::exp:
      return rate_ == 0 ? amplitude_ : amplitude_ * std::exp(-rate_ * t);
    case FunctionKind::power:
      return amplitude_ * std::pow(std::abs(t - center_), beta_);
    case FunctionKind::sequence:
      return norm_at(t);
    case FunctionKind::piecewise_log: {
      const std::size_t i = piece_of(breaks_, t);
      return values_[i] + slopes_[i] * std::log(t);
    }
  }
  return 0.0;
}

double SampledFunction::norm_at(double t) const {
  if (kind_ != FunctionKind::sequence) return std::abs(value(t));
  if (!(t > a_) || !(t < b_)) return 0.0;
  double sum = 0;
  if (r_ == 2) {
    for (const auto& m : modes_) {
      const double w = m.amplitude * std::exp(-m.rate * t);
      sum += w * w;
    }
    return std::sqrt(sum);
  }
  if (r_ == 1) {
    for (const auto& m : modes_) sum += std::abs(m.amplitude) * std::exp(-m.rate * t);
    return sum;
  }
  for (const auto& m : modes_) sum += std::pow(std::abs(m.amplitude) * std::exp(-m.rate * t), r_);
  return std::pow(sum, 1.0 / r_);
}

double SampledFunction::ess_sup() const {
  switch (kind_) {
    case FunctionKind::step: {
      double m = 0;
      for (double v : values_) m = std::max(m, std::abs(v));
      return m;
    }
    case FunctionKind::exp:
      return std::abs(amplitude_) * std::exp(-rate_ * a_);
    case FunctionKind::power: {
      if (amplitude_ == 0) return 0.0;
      if (beta_ == 0) return std::abs(amplitude_);
      if (beta_ > 0) {
        if (!std::isfinite(b_)) return kInf;
        return std::abs(amplitude_) *
               std::max(std::pow(std::abs(a_ - center_), beta_), std::pow(std::abs(b_ - center_), beta_));
      }
      if (center_ >= a_ && center_ <= b_) return kInf;
      const double d = center_ < a_ ? a_ - center_ : center_ - b_;
      return std::abs(amplitude_) * std::pow(d, beta_);
    }
    case FunctionKind::sequence: {
      double sum = 0;
      for (const auto& m : modes_) sum += std::pow(std::abs(m.amplitude) * std::exp(-m.rate * a_), r_);
      return std::pow(sum, 1.0 / r_);
    }
    case FunctionKind::piecewise_log: {
      double m = 0;
      for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        for (double t : {breaks_[i], breaks_[i + 1]}) {
          if (t == 0) {
            if (slopes_[i] != 0) return kInf;
            m = std::max(m, std::abs(values_[i]));
          } else if (std::isfinite(t)) {
            m = std::max(m, std::abs(values_[i] + slopes_[i] * std::log(t)));
          } else if (slopes_[i] != 0) {
            return kInf;
          }
        }
      }
      return m;
    }
  }
  return 0.0;
}

bool SampledFunction::is_zero() const {
  switch (kind_) {
    case FunctionKind::step:
      return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0; });
    case FunctionKind::exp:
    case FunctionKind::power:
      return amplitude_ == 0;
    case FunctionKind::sequence:
      return std::all_of(modes_.begin(), modes_.end(), [](const ExpMode& m) { return m.amplitude == 0; });
    case FunctionKind::piecewise_log:
      return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0; }) &&
             std::all_of(slopes_.begin(), slopes_.end(), [](double v) { return v == 0; });
  }
  return false;
}

std::vector<double> SampledFunction::breakpoints() const {
  if (kind_ == FunctionKind::step || kind_ == FunctionKind::piecewise_log) {
    std::vector<double> out;
    for (double x : breaks_)
      if (std::isfinite(x)) out.push_back(x);
    return out;
  }
  std::vector<double> out{a_};
  if (kind_ == FunctionKind::power && center_ > a_ && center_ < b_) out.push_back(center_);
  if (std::isfinite(b_)) out.push_back(b_);
  return out;
}

bool SampledFunction::norm_nonincreasing() const {
  switch (kind_) {
    case FunctionKind::exp:
    case FunctionKind::sequence:
      return true;
    case FunctionKind::step:
      for (std::size_t i = 0; i + 1 < values_.size(); ++i)
        if (std::abs(values_[i + 1]) > std::abs(values_[i])) return false;
      return true;
    case FunctionKind::power:
      return beta_ == 0 || amplitude_ == 0 || (beta_ < 0 && center_ <= a_) ||
             (beta_ > 0 && center_ >= b_);
    case FunctionKind::piecewise_log: {
      double prev = kInf;
      for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        if (slopes_[i] > 0) return false;
        const double left = breaks_[i] > 0 ? values_[i] + slopes_[i] * std::log(breaks_[i]) : kInf;
        const double right = std::isfinite(breaks_[i + 1]) ? values_[i] + slopes_[i] * std::log(breaks_[i + 1])
                                                           : (slopes_[i] == 0 ? values_[i] : -kInf);
        if (right < 0 || left > prev) return false;
        prev = right;
      }
      return true;
    }
  }
  return false;
}

double SampledFunction::min_rate() const {
  if (kind_ == FunctionKind::exp) return rate_;
  double m = kInf;
  for (const auto& mode : modes_)
    if (mode.amplitude != 0) m = std::min(m, mode.rate);
  return m;
}

SampledFunction SampledFunction::scaled(double c) const {
  SampledFunction f = *this;
  for (double& v : f.values_) v *= c;
  for (double& v : f.slopes_) v *= c;
  f.amplitude_ *= c;
  for (auto& m : f.modes_) m.amplitude *= c;
  f.tail_bound_ *= std::abs(c);
  return f;
}

std::string SampledFunction::describe() const {
  switch (kind_) {
    case FunctionKind::step:
      return "step[" + std::to_string(values_.size()) + " pieces on (" + format_number(a_) + ", " +
             format_number(b_) + ")]";
    case FunctionKind::exp:
      return "exp:" + format_number(amplitude_) + "," + format_number(rate_) + " on (" + format_number(a_) + ", " +
             format_number(b_) + ")";
    case FunctionKind::power:
      return "pow:" + format_number(amplitude_) + "," + format_number(beta_) + " centred at " +
             format_number(center_);
    case FunctionKind::sequence:
      return "sequence[" + std::to_string(modes_.size()) + " modes, r = " + format_number(r_) + "]";
    case FunctionKind::piecewise_log:
      return "piecewise-log[" + std::to_string(values_.size()) + " pieces]";
  }
  return "?";
}

double integrate_norm(const SampledFunction& f, double lo, double hi) {
  lo = std::max(lo, f.lower());
  hi = std::min(hi, f.upper());
  if (!(hi > lo)) return 0.0;
  if (f.kind() == FunctionKind::step) {
    double sum = 0;
    const auto& br = f.breaks();
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
      const double l = std::max(lo, br[i]), h = std::min(hi, br[i + 1]);
      if (h > l && f.values()[i] != 0) sum += std::abs(f.values()[i]) * (h - l);
    }
    return sum;
  }
  if (f.kind() == FunctionKind::exp) {
    const double A = std::abs(f.amplitude());
    if (f.rate() == 0) return A * (hi - lo);
    return A * (std::exp(-f.rate() * lo) - (std::isfinite(hi) ? std::exp(-f.rate() * hi) : 0.0)) / f.rate();
  }
  auto g = [&f](double t) { return f.norm_at(t); };
  std::vector<double> pts{lo};
  for (double x : f.breakpoints())
    if (x > lo && x < hi) pts.push_back(x);
  if (std::isfinite(hi)) {
    pts.push_back(hi);
    return numeric::integrate_panels(g, pts, 1e-12).value;
  }
  // Infinite upper end: only decaying sequences reach here.
  const double rate = f.min_rate();
  if (!(rate > 0)) return f.is_zero() ? 0.0 : kInf;
  double total = numeric::integrate_panels(g, pts, 1e-12).value;
  double x = pts.back();
  double h = 1.0 / rate;
  for (int i = 0; i < 200; ++i) {
    const double piece = numeric::integrate(g, x, x + h, 1e-12).value;
    total += piece;
    x += h;
    h *= 1.5;
    if (g(x) / rate <= 1e-16 * total) break;
  }
  return total;
}

std::vector<double> merge_breaks(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> out;
  out.reserve(x.size() + y.size());
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SampledFunction add_steps(const SampledFunction& f, const SampledFunction& g, double cf, double cg) {
  if (f.kind() != FunctionKind::step || g.kind() != FunctionKind::step)
    throw UnsupportedError("add_steps: both operands must be step functions");
  const auto br = merge_breaks(f.breaks(), g.breaks());
  std::vector<double> vals;
  for (std::size_t i = 0; i + 1 < br.size(); ++i) {
    const double mid = std::isfinite(br[i + 1]) ? 0.5 * (br[i] + br[i + 1]) : br[i] + 1.0;
    vals.push_back(cf * f.value(mid) + cg * g.value(mid));
  }
  return SampledFunction::step(br, vals);
}

}  // namespace orlicz
