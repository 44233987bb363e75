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
#ifndef ORLICZ_DIAGSYS_HPP
#define ORLICZ_DIAGSYS_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/norms.hpp"
#include "orlicz/rearrange.hpp"

namespace orlicz {

enum class WeightRule { inverse_phi, scaled_inverse_phi, explicit_list };

// A e_n = lambda_n e_n on l^r, observed through C e_n = c_n e_n.
struct DiagonalSystem {
  std::vector<double> eigenvalues;  // all <= 0
  std::vector<double> weights;      // c_n >= 0
  double r = 2;
  WeightRule weight_rule = WeightRule::inverse_phi;
  double weight_scale = 1;  // factor g in c_n = g Phi^{-1}(-lambda_n)
  std::string rule;         // generating expression in n, if any
  std::string phi_name;     // provenance of the Phi behind default weights

  std::size_t size() const { return eigenvalues.size(); }
  double growth_bound() const;
  bool default_weights() const { return weight_rule != WeightRule::explicit_list; }
  std::string describe() const;
};

// c_n = scale * Phi^{-1}(-lambda_n), zero where lambda_n = 0.
DiagonalSystem make_diagonal_system(std::vector<double> eigenvalues, double r, const YoungFunction& phi,
                                    double scale = 1.0);
DiagonalSystem make_diagonal_system(std::vector<double> eigenvalues, double r, std::vector<double> weights);

// ||x||_{l^r}.
double lr_norm(const std::vector<double>& x, double r);

// t -> C T(t) x as a sequence-valued function on (0, tau).
SampledFunction trajectory(const DiagonalSystem& sys, const std::vector<double>& x, double tau = kInf);

// Luxemburg norm of t -> ||C T(t) x||_{l^r} over (0, tau).  An undamped
// coordinate with c_n x_n != 0 makes the infinite-horizon norm +inf.
NormResult trajectory_output_norm(const DiagonalSystem& sys, const std::vector<double>& x, const YoungFunction& phi,
                                  double tau = kInf);

struct AdmissibilityStrategy {
  bool basis = true;
  int random = 0;       // random unit vectors
  int refine = 0;       // perturbation rounds around the best candidate
  std::uint64_t seed = 1;
};

struct AdmissibilityReport {
  double tau = kInf;
  double constant_lower = 0;
  std::vector<double> witness;
  std::optional<double> constant_upper;
  std::vector<double> candidate_values;  // per candidate, in search order
  int candidates = 0;
  std::string verdict;
};

AdmissibilityReport admissibility_constant(const DiagonalSystem& sys, const YoungFunction& phi, double tau,
                                           const AdmissibilityStrategy& strategy);

// sup_n |c_n| / |z - lambda_n|.
double resolvent_gain(const DiagonalSystem& sys, std::complex<double> z);

enum class WeissWeight { inverse_conjugate, exp_norm };
const char* weight_name(WeissWeight w);

struct ModePeak {
  double value = 0;
  double arg = 0;
};

struct WeissResult {
  double sup = 0;
  double z_star = 0;
  int n_star = -1;  // zero-based mode index, -1 when all weights vanish
  WeissWeight weight = WeissWeight::inverse_conjugate;
  std::vector<ModePeak> per_mode;
  bool tail_monotone = true;
  std::string verdict;  // "finite", "finite-N only" or "unbounded"
};

// sup over real z > alpha of weight(z) * ||C R(z, A)||, mode by mode.
WeissResult weiss_supremum(const DiagonalSystem& sys, const YoungFunction& phi, double alpha = 0.0,
                           WeissWeight weight = WeissWeight::inverse_conjugate);

struct SemigroupSup {
  double sup = 0;
  double t_star = 0;
  int n_star = -1;
  std::vector<ModePeak> per_mode;
  bool tail_monotone = true;
  std::string verdict;
};

// sup_{t > 0} ||C T(t)|| / Phi^{-1}(1/t).
SemigroupSup semigroup_weiss_sup(const DiagonalSystem& sys, const YoungFunction& phi);

struct CalculusConstant {
  double value = 0;
  double argmax_s = 0;
};

// sup_{0 < s <= 1/t} Phi^{-1}(s) e^{-st} / Phi^{-1}(1/t).
CalculusConstant calculus_constant(const YoungFunction& phi, double t);

struct AuxBound {
  double sup_value = 0;
  double argmax_s = 0;
  double bound = 0;
  double slack = 0;  // (bound - sup) / bound
  bool holds = true;
};

// sup_s s e^{-st/2} / Phi^{-1}(s) against 2 / (t Phi^{-1}(1/t)).
AuxBound aux_bound_check(const YoungFunction& phi, double t);

struct WeakAdmissibility {
  double weak_norm = 0;
  double bound = 0;  // M ||x||
  double slack = 0;  // (bound - weak_norm) / max(bound, tiny)
  bool holds = true;
};

// Weak-Orlicz norm of t -> ||C T(t) x|| against M ||x||_{l^r}.
WeakAdmissibility weak_admissibility_check(const DiagonalSystem& sys, const YoungFunction& phi,
                                           const std::vector<double>& x, double M);

}  // namespace orlicz

#endif
