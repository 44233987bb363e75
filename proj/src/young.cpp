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
#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace orlicz {

using numeric::format_number;

// ---------------------------------------------------------------- rho

RhoFunction::RhoFunction(std::string name, Real real, Holo holo)
    : name_(std::move(name)), real_(std::move(real)), holo_(std::move(holo)) {}

std::complex<double> RhoFunction::operator()(std::complex<double> z) const {
  if (!holo_) throw UnsupportedError("rho '" + name_ + "' has no complex evaluation");
  return holo_(z);
}

RhoFunction rho_one() {
  return {"one", [](double) { return 1.0; }, [](std::complex<double>) { return std::complex<double>(1.0); }};
}

RhoFunction rho_id() {
  return {"id", [](double t) { return t; }, [](std::complex<double> z) { return z; }};
}

RhoFunction rho_min1() {
  return {"min1", [](double t) { return std::min(1.0, t); }};
}

RhoFunction rho_log1p() {
  return {"log1p", [](double t) { return std::log1p(t); },
          [](std::complex<double> z) { return std::log(1.0 + z); }};
}

RhoFunction rho_power(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw PreconditionError("rho pow: exponent must lie in [0, 1]");
  return {"pow:" + format_number(r), [r](double t) { return std::pow(t, r); },
          [r](std::complex<double> z) { return std::pow(z, r); }};
}

RhoFunction rho_affine(double a, double b, const RhoFunction& first, const RhoFunction& second) {
  if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b))
    throw PreconditionError("rho affine: coefficients must be positive");
  RhoFunction::Holo holo;
  if (first.holomorphic() && second.holomorphic())
    holo = [a, b, first, second](std::complex<double> z) { return a * first(z) + b * second(z); };
  return {"affine:" + format_number(a) + "," + format_number(b) + "," + first.name() + "," + second.name(),
          [a, b, first, second](double t) { return a * first(t) + b * second(t); }, holo};
}

RhoFunction rho_compose(const RhoFunction& outer, const RhoFunction& inner) {
  RhoFunction::Holo holo;
  if (outer.holomorphic() && inner.holomorphic())
    holo = [outer, inner](std::complex<double> z) { return outer(inner(z)); };
  return {"compose:" + outer.name() + "," + inner.name(),
          [outer, inner](double t) { return outer(inner(t)); }, holo};
}

// ---------------------------------------------------------------- class P spec

ClassPSpec::ClassPSpec(double p, double q, RhoFunction rho, std::optional<Sector> sector)
    : p_(p), q_(q), rho_(std::move(rho)), sector_(sector) {
  if (!(p > 1.0) || !(q > p) || !std::isfinite(q))
    throw PreconditionError("class-p spec needs 1 < p < q < inf");
  p_conj_ = p / (p - 1.0);
  q_conj_ = q / (q - 1.0);
  if (sector_) {
    const double pi = std::acos(-1.0);
    if (!(sector_->delta > 0 && sector_->delta <= pi / 2) || !(sector_->m0 > 0) || !(sector_->m1 > 0))
      throw PreconditionError("class-p sector needs delta in (0, pi/2] and m0, m1 > 0");
  }
}

std::string ClassPSpec::describe() const {
  return "classp:" + format_number(p_) + "," + format_number(q_) + "," + rho_.name();
}

double ClassPSpec::inverse_phi(double t) const {
  if (t <= 0) return 0.0;
  return std::pow(t, 1.0 / p_) * rho_(std::pow(t, 1.0 / q_ - 1.0 / p_));
}

std::complex<double> ClassPSpec::inverse_phi(std::complex<double> z) const {
  if (z == std::complex<double>(0.0)) return 0.0;
  return std::pow(z, 1.0 / p_) * rho_(std::pow(z, 1.0 / q_ - 1.0 / p_));
}

// ---------------------------------------------------------------- YoungFunction

YoungFunction::YoungFunction(std::shared_ptr<const YoungModel> model) : model_(std::move(model)) {}

double YoungFunction::forward(double t) const { return t <= 0 ? 0.0 : model_->forward(t); }
double YoungFunction::inverse(double y) const { return y <= 0 ? 0.0 : model_->inverse(y); }
double YoungFunction::derivative(double t) const { return model_->derivative(std::max(t, 0.0)); }
std::optional<YoungFunction> YoungFunction::conjugate() const { return model_->conjugate(); }
Delta2 YoungFunction::delta2_global() const { return model_->delta2; }
const std::string& YoungFunction::provenance() const { return model_->provenance; }
bool YoungFunction::forward_direct() const { return model_->forward_direct(); }
bool YoungFunction::inverse_direct() const { return model_->inverse_direct(); }
const ClassPSpec* YoungFunction::class_p() const { return model_->class_p(); }

double YoungModel::inverse(double y) const {
  auto f = [this](double t) { return forward(t); };
  return numeric::solve_increasing(f, y, 1.0, Tolerances::inverse).mid();
}

double YoungModel::derivative(double t) const {
  if (t <= 0) {
    const double h = 1e-8;
    return forward(h) / h;
  }
  const double h = 1e-6;
  return (forward(t * (1 + h)) - forward(t * (1 - h))) / (2 * h * t);
}

namespace {

class PowerModel final : public YoungModel {
 public:
  PowerModel(double c, double p, std::string tag) : c_(c), p_(p) {
    provenance = std::move(tag);
    delta2 = Delta2::declared_true;
  }
  double forward(double t) const override { return c_ * std::pow(t, p_); }
  double inverse(double y) const override { return std::pow(y / c_, 1.0 / p_); }
  double derivative(double t) const override { return c_ * p_ * std::pow(t, p_ - 1.0); }
  bool inverse_direct() const override { return true; }
  std::optional<YoungFunction> conjugate() const override {
    const double pc = p_ / (p_ - 1.0);
    const double cc = (p_ - 1.0) * c_ * std::pow(c_ * p_, -pc);
    return YoungFunction(std::make_shared<PowerModel>(cc, pc, "conjugate-of(" + provenance + ")"));
  }

 private:
  double c_, p_;
};

class ClassPModel final : public YoungModel {
 public:
  explicit ClassPModel(ClassPSpec spec) : spec_(std::move(spec)) {
    provenance = "class-p(" + spec_.describe() + ")";
    delta2 = Delta2::declared_true;
  }
  double forward(double x) const override {
    // Phi^{-1} is a power law between breaks of rho, so a secant in log-log
    // coordinates lands on the root in a step or two.
    auto m = [this, x](double w) { return x / spec_.inverse_phi(w); };
    // Phi(x) lies between x^p and x^q up to the scale of rho(1).
    const double guess = std::pow(x / spec_.rho()(1.0), x < 1 ? spec_.q() : spec_.p());
    return numeric::solve_unit_level(m, guess, Tolerances::inverse).mid();
  }
  double inverse(double y) const override { return spec_.inverse_phi(y); }
  double derivative(double x) const override {
    if (x <= 0) return YoungModel::derivative(x);
    const double y = forward(x);
    const double h = 1e-6;
    const double d = (spec_.inverse_phi(y * (1 + h)) - spec_.inverse_phi(y * (1 - h))) / (2 * h * y);
    return 1.0 / d;
  }
  bool forward_direct() const override { return false; }
  bool inverse_direct() const override { return true; }
  const ClassPSpec* class_p() const override { return &spec_; }

 private:
  ClassPSpec spec_;
};

// sum_{k>=2} sign^k x^k / denom(k), used where cancellation would hurt.
double series_expm1t(double t) {
  double term = t;
  double sum = 0;
  for (int k = 2; k < 40; ++k) {
    term *= t / k;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double series_entropy(double s) {
  double sum = 0;
  double pw = s;
  for (int k = 2; k < 200; ++k) {
    pw *= -s;
    const double term = -pw / (static_cast<double>(k) * (k - 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

class EntropyModel;

class ExpMinusLinearModel final : public YoungModel {
 public:
  ExpMinusLinearModel() {
    provenance = "expm1t";
    delta2 = Delta2::declared_false;
  }
  double forward(double t) const override { return t < 0.1 ? series_expm1t(t) : std::expm1(t) - t; }
  double derivative(double t) const override { return std::expm1(t); }
  std::optional<YoungFunction> conjugate() const override;
};

// (1 + s) log(1 + s) - s.
class EntropyModel final : public YoungModel {
 public:
  EntropyModel() {
    provenance = "conjugate-of(expm1t)";
    delta2 = Delta2::declared_true;
  }
  double forward(double s) const override {
    return s < 0.1 ? series_entropy(s) : (1.0 + s) * std::log1p(s) - s;
  }
  double derivative(double s) const override { return std::log1p(s); }
  std::optional<YoungFunction> conjugate() const override {
    return YoungFunction(std::make_shared<ExpMinusLinearModel>());
  }
};

std::optional<YoungFunction> ExpMinusLinearModel::conjugate() const {
  return YoungFunction(std::make_shared<EntropyModel>());
}

class UserModel final : public YoungModel {
 public:
  UserModel(std::string name, std::function<double(double)> fwd, std::function<double(double)> inv, Delta2 d)
      : fwd_(std::move(fwd)), inv_(std::move(inv)) {
    provenance = "user-defined(" + name + ")";
    delta2 = d;
  }
  double forward(double t) const override { return fwd_(t); }
  double inverse(double y) const override { return inv_ ? inv_(y) : YoungModel::inverse(y); }
  bool inverse_direct() const override { return static_cast<bool>(inv_); }

 private:
  std::function<double(double)> fwd_, inv_;
};

}  // namespace

// Exact maximisation of s*t - Phi(t) per query.  When only the inverse of
// Phi is closed-form the equivalent concave problem in w = Phi(t),
// s * Phi^{-1}(w) - w, is used instead.
class NumericConjugate final : public YoungModel {
 public:
  NumericConjugate(YoungFunction base, std::vector<double> grid)
      : base_(std::move(base)), inverse_form_(!base_.forward_direct() && base_.inverse_direct()) {
    provenance = "numeric-conjugate-of(" + base_.provenance() + ")";
    delta2 = Delta2::untested;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::remove_if(grid.begin(), grid.end(), [](double s) { return !(s > 0) || !std::isfinite(s); }),
               grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (grid.empty()) throw PreconditionError("conjugate_numeric: empty grid");
    double hint = 1.0;
    for (double s : grid) {
      const auto [arg, val] = maximise(s, hint, nullptr, nullptr);
      grid_.push_back(s);
      args_.push_back(arg);
      values_.push_back(val);
      hint = arg;
    }
  }

  double forward(double s) const override { return solve(s).second; }

  // Envelope theorem: the derivative is the maximiser in the t variable.
  double derivative(double s) const override {
    if (s <= 0) return 0.0;
    const double arg = solve(s).first;
    return inverse_form_ ? base_.inverse(arg) : arg;
  }

  double inverse(double y) const override {
    double guess = 1.0;
    auto it = std::lower_bound(values_.begin(), values_.end(), y);
    if (it != values_.end()) guess = grid_[static_cast<std::size_t>(it - values_.begin())];
    else guess = grid_.back();
    auto f = [this](double s) { return forward(s); };
    return numeric::solve_increasing(f, y, guess, Tolerances::inverse).mid();
  }

  bool forward_direct() const override { return false; }
  std::optional<YoungFunction> conjugate() const override { return base_; }

  std::optional<double> approximate(double s) const {
    if (s < grid_.front() || s > grid_.back()) return std::nullopt;
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), s);
    if (it == grid_.end()) return values_.back();
    const std::size_t j = static_cast<std::size_t>(it - grid_.begin());
    if (j == 0) return values_.front();
    const double s0 = grid_[j - 1], s1 = grid_[j];
    const double v0 = values_[j - 1], v1 = values_[j];
    if (!(v0 > 0) || !(v1 > 0)) return v0 + (v1 - v0) * (s - s0) / (s1 - s0);
    const double w = std::log(s / s0) / std::log(s1 / s0);
    return std::exp(std::log(v0) + w * (std::log(v1) - std::log(v0)));
  }

 private:
  double objective(double s, double x) const {
    return inverse_form_ ? s * base_.inverse(x) - x : s * x - base_.forward(x);
  }

  std::pair<double, double> solve(double s) const {
    if (s <= 0) return {0.0, 0.0};
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), s);
    const std::size_t j = static_cast<std::size_t>(it - grid_.begin());
    if (j > 0 && grid_[j - 1] == s) return {args_[j - 1], values_[j - 1]};
    if (j > 0 && j < grid_.size()) {
      // Maximisers are monotone in s, so the cached neighbours bracket it.
      const double lo = args_[j - 1] * (1 - 1e-6);
      const double hi = args_[j] * (1 + 1e-6);
      return maximise(s, args_[j - 1], &lo, &hi);
    }
    return maximise(s, j == 0 ? args_.front() : args_.back(), nullptr, nullptr);
  }

  std::pair<double, double> maximise(double s, double hint, const double* lo_in, const double* hi_in) const {
    auto g = [this, s](double x) { return objective(s, x); };
    if (lo_in && hi_in && *lo_in > 0 && *hi_in > *lo_in) {
      const numeric::Extremum e = numeric::golden_max_log(g, *lo_in, *hi_in, Tolerances::golden);
      const double rel_lo = std::log(e.arg / *lo_in), rel_hi = std::log(*hi_in / e.arg);
      const double width = std::log(*hi_in / *lo_in);
      if (rel_lo > 1e-3 * width && rel_hi > 1e-3 * width) return {e.arg, std::max(e.value, 0.0)};
    }
    if (!(hint > 0) || !std::isfinite(hint)) hint = 1.0;
    double x = hint;
    double gx = g(x);
    if (g(2 * x) > gx) {
      for (;;) {
        const double up = g(2 * x);
        if (up <= gx) break;
        x *= 2;
        gx = up;
        if (x > 1e300) throw Error("conjugate: unbounded supremum (not superlinear)");
      }
    } else {
      for (;;) {
        const double down = g(0.5 * x);
        if (down < gx || x < 1e-300) break;
        x *= 0.5;
        gx = down;
      }
    }
    const numeric::Extremum e = numeric::golden_max_log(g, x * 0.5, x * 2, Tolerances::golden);
    return {e.arg, std::max(e.value, 0.0)};
  }

  YoungFunction base_;
  bool inverse_form_;
  std::vector<double> grid_, args_, values_;
};

YoungFunction YoungFunction::user_defined(std::string name, std::function<double(double)> forward,
                                          std::function<double(double)> inverse, Delta2 delta2) {
  return YoungFunction(std::make_shared<UserModel>(std::move(name), std::move(forward), std::move(inverse), delta2));
}

YoungFunction make_power(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw PreconditionError("make_power: need 1 < p < inf");
  return YoungFunction(std::make_shared<PowerModel>(1.0, p, "power(" + format_number(p) + ")"));
}

YoungFunction make_scaled_power(double c, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw PreconditionError("make_scaled_power: need 1 < p < inf");
  if (!(c > 0) || !std::isfinite(c)) throw PreconditionError("make_scaled_power: need c > 0");
  return YoungFunction(
      std::make_shared<PowerModel>(c, p, "power(" + format_number(p) + ")*" + format_number(c)));
}

YoungFunction make_class_p(const ClassPSpec& spec) {
  const RhoFunction& rho = spec.rho();
  const auto grid = numeric::log_grid(1e-6, 1e6, 25);
  for (double t : grid) {
    const double v = rho(t);
    if (!(v > 0) || !std::isfinite(v))
      throw ConstructionError("rho not positive at t = " + format_number(t));
  }
  for (double s : grid) {
    for (double t : grid) {
      const double lhs = rho(s * t);
      const double rhs = std::max(1.0, s) * rho(t);
      if (lhs > rhs * (1 + 1e-12))
        throw ConstructionError("rho(st) <= max(1,s) rho(t) fails at (s, t) = (" + format_number(s) + ", " +
                                format_number(t) + ")");
    }
  }
  for (double a : grid) {
    for (double b : grid) {
      const double mid = rho(0.5 * (a + b));
      const double avg = 0.5 * (rho(a) + rho(b));
      if (mid < avg * (1 - 1e-12))
        throw ConstructionError("rho midpoint concavity fails at (a, b) = (" + format_number(a) + ", " +
                                format_number(b) + ")");
    }
  }
  const auto tgrid = numeric::log_grid(1e-12, 1e12, 241);
  double prev = 0;
  for (double t : tgrid) {
    const double v = spec.inverse_phi(t);
    if (!(v > prev))
      throw ConstructionError("induced inverse not strictly increasing at t = " + format_number(t));
    prev = v;
  }
  return YoungFunction(std::make_shared<ClassPModel>(spec));
}

YoungFunction make_expm1t() { return YoungFunction(std::make_shared<ExpMinusLinearModel>()); }

YoungFunction conjugate_numeric(const YoungFunction& phi, const std::vector<double>& grid) {
  return YoungFunction(std::make_shared<NumericConjugate>(phi, grid));
}

YoungFunction conjugate_numeric(const YoungFunction& phi) {
  return conjugate_numeric(phi, numeric::log_grid(1e-6, 1e6, 121));
}

YoungFunction complementary(const YoungFunction& phi) {
  if (auto c = phi.conjugate()) return *c;
  return conjugate_numeric(phi);
}

std::optional<double> conjugate_approximate(const YoungFunction& phi, double s) {
  const auto* nc = dynamic_cast<const NumericConjugate*>(&phi.model());
  if (!nc) return std::nullopt;
  return nc->approximate(s);
}

}  // namespace orlicz
