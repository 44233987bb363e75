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
#ifndef ORLICZ_NORMS_HPP
#define ORLICZ_NORMS_HPP

#include <cstdint>
#include <vector>

#include "orlicz/sampled.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

struct NormDiagnostics {
  int panels = 0;
  double truncation = kInf;  // point beyond which the modular was bounded, not integrated
  double tail_bound = 0;     // certified bound on the discarded modular
  int iterations = 0;
};

struct NormResult {
  double value = 0;
  double lo = 0;
  double hi = 0;
  double rel_tol = Tolerances::bisection;
  NormDiagnostics diagnostics;
};

struct NormOptions {
  double rel_tol = Tolerances::bisection;
  double quad_tol = Tolerances::quadrature;
};

struct ModularResult {
  double value = 0;  // may be +inf
  NormDiagnostics diagnostics;
};

// int Phi(||f(t)|| / k) dt over the domain.
ModularResult modular_detailed(const SampledFunction& f, const YoungFunction& phi, double k,
                               double quad_tol = Tolerances::quadrature);
double modular(const SampledFunction& f, const YoungFunction& phi, double k);

NormResult luxemburg_norm(const SampledFunction& f, const YoungFunction& phi, const NormOptions& opts = {});

// int_0^w Phi(v)/v dv, with the certified tail Phi(w_min) below the last panel.
double log_modular(const YoungFunction& phi, double w, double quad_tol = Tolerances::quadrature);

// Luxemburg norm of e^{-s t} on (0, inf).
NormResult exp_norm(double s, const YoungFunction& phi, const NormOptions& opts = {});

struct OrliczBounds {
  double lo = 0;
  double hi = 0;
  double luxemburg = 0;
  // 1 - lo / luxemburg; negative when the witness beats the Luxemburg norm.
  double slack = 0;
  std::string best_witness;
};

// hi = 2 * Luxemburg; lo from step witnesses normalised in the conjugate
// Luxemburg norm (Young-equality witness, top level set, random steps).
OrliczBounds orlicz_norm_bounds(const SampledFunction& f, const YoungFunction& phi, int witnesses,
                                std::uint64_t seed = 1);

struct InequalityVerdict {
  double lhs = 0;
  double rhs = 0;
  double ratio = 0;
  bool holds = true;
};

// int ||f|| ||g|| <= 2 ||f||_Phi ||g||_PhiTilde.
InequalityVerdict check_hoelder(const SampledFunction& f, const SampledFunction& g, const YoungFunction& phi);

// Nonnegative step function of two variables: values[i][j] on
// (x_breaks[i], x_breaks[i+1]) x (y_breaks[j], y_breaks[j+1]).
struct Step2D {
  std::vector<double> x_breaks;
  std::vector<double> y_breaks;
  std::vector<std::vector<double>> values;
};

// || (int f(., y)^r dy)^{1/r} ||_Phi <= 2^{1/r} (int ||f(., y)||_Phi^r dy)^{1/r}.
// Throws UnsupportedError when Phi(t^{1/r}) is not convex and increasing.
InequalityVerdict check_minkowski(const Step2D& f, const YoungFunction& phi, double r);

// Direct L^p norm of a step function (oracle for the power family).
double step_lp_norm(const SampledFunction& f, double p);

}  // namespace orlicz

#endif
