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
#ifndef ORLICZ_SHIFT_HPP
#define ORLICZ_SHIFT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "orlicz/diagsys.hpp"

namespace orlicz {

// (S(t) f)(r) = f(r - t) for r > a + t, zero before; same domain (a, b).
SampledFunction right_shift(const SampledFunction& f, double t);

// ||S(t) f - f|| in the Luxemburg norm.
double shift_continuity_modulus(const SampledFunction& f, const YoungFunction& phi, double t);

struct CounterexampleBuild {
  explicit CounterexampleBuild(YoungFunction f) : phi(std::move(f)) {}

  YoungFunction phi;
  int n0 = 2;
  std::vector<double> tks;                          // t_1..t_K
  std::vector<double> growth;                       // Phi(2 t_k) / Phi(t_k)
  std::vector<std::pair<double, double>> intervals;  // I_k as (left, right)
  // |I_k| = 1 / (Phi(t_k) (n0 + k - 1)^2), kept exactly; right - left loses
  // digits once |I_k| is tiny next to 1.
  std::vector<double> lengths;
  SampledFunction u = SampledFunction::zero(0, 1);   // sum t_k 1_{I_k}
  SampledFunction v = SampledFunction::zero(0, 1);   // 4 u
  std::vector<double> modular_u;                     // partial sums of int Phi(u)
  std::vector<double> modular_2u;                    // partial sums of int Phi(2u)
  // Gap between I_k and what precedes it (0 for the left end of (0, 1)).
  std::vector<double> gaps;
};

// Step-function witness that the right shift is not strongly continuous on
// L_Phi(0, 1) when Phi fails Delta2 near infinity.  Throws PreconditionError
// for Phi that pass the near-infinity check, ConstructionError if the scan
// stalls or Phi overflows.
CounterexampleBuild build_delta2_counterexample(const YoungFunction& phi, int K, int n0 = 2,
                                                double scan_step = 1e-3);

struct Discontinuity {
  double t = 0;
  std::vector<double> partial_modular;  // int Phi(|S(t)v - v|) over the first k pieces
  int crossing = -1;                    // first k (1-based) with partial modular > 1, -1 if none
  std::string verdict;                  // "discontinuous", "undecided" or "continuous at 0"
};

// Partial modulars of S(t) v - v over the first K pieces of the build.
// Requires t below every gap and below the room left after the K-th piece.
Discontinuity counterexample_discontinuity(const CounterexampleBuild& build, double t, int K);

// Samples of r -> -1_{(0, t]}(r) C T(t - r) x, one coordinate vector per r.
struct EngelSamples {
  std::vector<double> grid;
  std::vector<std::vector<double>> values;
};

EngelSamples engel_R_apply(const DiagonalSystem& sys, const std::vector<double>& x, double t, double tau,
                           const std::vector<double>& grid);

// max_r || R(t+s)x - R(t)T(s)x - S(t)R(s)x ||_{l^r} over the grid.
double engel_cocycle_defect(const DiagonalSystem& sys, const std::vector<double>& x, double t, double s, double tau,
                            const std::vector<double>& grid);

// (Lf)(t) = int_t^tau f(s)/s ds for step f on (a, tau), in closed
// piecewise-logarithmic form on (0, tau).
SampledFunction integral_operator_L(const SampledFunction& f, double tau);

// Value of Lf at 0: finite only if f vanishes near 0.
double integral_operator_L_at_zero(const SampledFunction& f);

struct LNormEstimate {
  double max_ratio = 0;
  int argmax_trial = -1;
  std::vector<double> ratios;  // trial 0 is f = 1, then the random trials, then the indicator probes
};

// ||Lf||_Phi / ||f||_Phi over f = 1, trials - 1 random step functions and
// 21 power-profile probes c (t / tau)^{-gamma}. max_ratio also covers an amplitude ascent
// from the best of those.
LNormEstimate estimate_L_norm(const YoungFunction& phi, double tau, int trials, std::uint64_t seed = 1);

}  // namespace orlicz

#endif
