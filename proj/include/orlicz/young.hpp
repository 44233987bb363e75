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
#ifndef ORLICZ_YOUNG_HPP
#define ORLICZ_YOUNG_HPP

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/numeric.hpp"

namespace orlicz {

// Concave generator rho: (0, inf) -> (0, inf) used by class-P functions.
// Holomorphic generators also carry a principal-branch complex evaluation.
class RhoFunction {
 public:
  using Real = std::function<double(double)>;
  using Holo = std::function<std::complex<double>(std::complex<double>)>;

  RhoFunction(std::string name, Real real, Holo holo = {});

  double operator()(double t) const { return real_(t); }
  std::complex<double> operator()(std::complex<double> z) const;
  bool holomorphic() const { return static_cast<bool>(holo_); }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Real real_;
  Holo holo_;
};

RhoFunction rho_one();
RhoFunction rho_id();
RhoFunction rho_min1();
RhoFunction rho_log1p();
// t^r, r in [0, 1].
RhoFunction rho_power(double r);
// a*first + b*second, a, b > 0.
RhoFunction rho_affine(double a, double b, const RhoFunction& first, const RhoFunction& second);
// outer(inner(t)).
RhoFunction rho_compose(const RhoFunction& outer, const RhoFunction& inner);

struct Sector {
  double delta = 0;  // half opening angle
  double m0 = 0;
  double m1 = 0;
};

// The (p, q, rho) triple generating Phi^{-1}(t) = t^{1/p} rho(t^{1/q - 1/p}).
class ClassPSpec {
 public:
  ClassPSpec(double p, double q, RhoFunction rho, std::optional<Sector> sector = std::nullopt);

  double p() const { return p_; }
  double q() const { return q_; }
  // Hoelder conjugates, stored once at construction.
  double p_conj() const { return p_conj_; }
  double q_conj() const { return q_conj_; }
  const RhoFunction& rho() const { return rho_; }
  const std::optional<Sector>& sector() const { return sector_; }
  std::string describe() const;

  double inverse_phi(double t) const;
  std::complex<double> inverse_phi(std::complex<double> z) const;

 private:
  double p_, q_, p_conj_, q_conj_;
  RhoFunction rho_;
  std::optional<Sector> sector_;
};

enum class Delta2 { declared_true, declared_false, untested };

class YoungModel;

// An immutable, cheaply copyable Young function.  Copies share the same
// underlying model; any internal cache is filled at construction.
class YoungFunction {
 public:
  explicit YoungFunction(std::shared_ptr<const YoungModel> model);

  double operator()(double t) const { return forward(t); }
  double forward(double t) const;
  double inverse(double y) const;
  // Right derivative (exact where the model knows it).
  double derivative(double t) const;
  // Exact complementary function, when the model knows one in closed form.
  std::optional<YoungFunction> conjugate() const;
  Delta2 delta2_global() const;
  const std::string& provenance() const;
  // Whether forward / inverse are evaluated directly (no root finding or
  // optimisation inside).
  bool forward_direct() const;
  bool inverse_direct() const;
  const ClassPSpec* class_p() const;
  const YoungModel& model() const { return *model_; }

  static YoungFunction user_defined(std::string name, std::function<double(double)> forward,
                                    std::function<double(double)> inverse = {},
                                    Delta2 delta2 = Delta2::untested);

 private:
  std::shared_ptr<const YoungModel> model_;
};

class YoungModel {
 public:
  virtual ~YoungModel() = default;
  virtual double forward(double t) const = 0;
  virtual double inverse(double y) const;
  virtual double derivative(double t) const;
  virtual std::optional<YoungFunction> conjugate() const { return std::nullopt; }
  virtual bool forward_direct() const { return true; }
  virtual bool inverse_direct() const { return false; }
  virtual const ClassPSpec* class_p() const { return nullptr; }

  std::string provenance;
  Delta2 delta2 = Delta2::untested;
};

// c * t^p.  make_power(p) is c = 1; its conjugate is the scaled power
// (p - 1) p^{-p/(p-1)} s^{p/(p-1)}.
YoungFunction make_power(double p);
YoungFunction make_scaled_power(double c, double p);

// Class-P function from its generator.  Validates the generator on a log
// grid and throws ConstructionError naming the first violation.
YoungFunction make_class_p(const ClassPSpec& spec);

// e^t - t - 1, which is not Delta2 near infinity.  Its closed-form
// conjugate is (1 + s) log(1 + s) - s.
YoungFunction make_expm1t();

// Numerical Legendre-Fenchel conjugate.  Every query is an exact concave
// maximisation; values on `grid` are cached at construction and only used
// to bracket maximisers and for approximate().
class NumericConjugate;
YoungFunction conjugate_numeric(const YoungFunction& phi, const std::vector<double>& grid);
YoungFunction conjugate_numeric(const YoungFunction& phi);

// The exact conjugate if known, otherwise conjugate_numeric on the default grid.
YoungFunction complementary(const YoungFunction& phi);

// Monotone (log-log linear) interpolation of a numeric conjugate's cache;
// returns nullopt when phi is not a numeric conjugate or s is off-grid.
std::optional<double> conjugate_approximate(const YoungFunction& phi, double s);

// Validation of the Young-function invariants on sampled grids.
struct YoungValidation {
  bool ok = true;
  std::vector<std::string> failures;
};
YoungValidation validate_young(const YoungFunction& phi, int depth = 40);
// Convex, increasing, zero at zero: what Psi(t) = Phi(t^{1/r}) has to
// satisfy for the Luxemburg-Psi functional to be a norm.
YoungValidation validate_convex_increasing(const std::function<double(double)>& psi, int depth = 40);

enum class Delta2Mode { global, near_infinity };

struct Delta2Report {
  double k_estimate = 0;
  double argmax_t = 0;
  bool holds = false;
  std::string verdict;
  std::vector<double> grid;
};

// Grid estimate of sup Phi(2t)/Phi(t).  A pass is evidence, not proof.
Delta2Report check_delta2(const YoungFunction& phi, Delta2Mode mode, const std::vector<double>& grid);
std::vector<double> default_delta2_grid(Delta2Mode mode);

struct InequalityCheck {
  std::string name;
  double worst_slack = kInf;
  double at_s = 0;
  double at_t = 0;
  int samples = 0;
  bool holds = true;
};

struct InequalityReport {
  std::vector<InequalityCheck> checks;
  double tolerance = Tolerances::inequality_slack;
  bool holds = true;
};

// Sandwich t <= Phi^{-1}(t) PhiTilde^{-1}(t) <= 2t, plus, given a class-P
// spec, the power-type scaling bounds and their transformed lower bounds.
// Slacks are relative; the report holds when all slacks >= -tolerance.
InequalityReport inequality_report(const YoungFunction& phi, const YoungFunction& phitilde,
                                   const ClassPSpec* spec, const std::vector<double>& grid,
                                   double tolerance = Tolerances::inequality_slack);

struct SectorReport {
  double m0_est = kInf;
  double m1_est = 0;
  double rho_ratio_min = kInf;
  double rho_ratio_max = 0;
  std::complex<double> argmin_z;
  std::complex<double> argmax_z;
  int samples = 0;
  bool verdict = false;
};

// |rho(z)| / rho(|z|) at one point.
double sector_rho_ratio(const RhoFunction& rho, std::complex<double> z);

// Samples z = r e^{i theta}, r log-spaced in [1e-6, 1e6], theta in the open
// interval (-delta, delta); `samples` points per axis.
SectorReport check_sector_equivalence(const ClassPSpec& spec, double delta, int samples);

}  // namespace orlicz

#endif
