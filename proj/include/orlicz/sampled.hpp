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
#ifndef ORLICZ_SAMPLED_HPP
#define ORLICZ_SAMPLED_HPP

#include <string>
#include <vector>

#include "orlicz/numeric.hpp"

namespace orlicz {

enum class FunctionKind { step, exp, power, sequence, piecewise_log };

// amplitude * e^{-rate t}
struct ExpMode {
  double amplitude = 0;
  double rate = 0;
};

// A scalar- or sequence-valued function on an interval (a, b), b possibly
// infinite.  Immutable value type.
//
//   step           values[i] on (breaks[i], breaks[i+1])
//   exp            amplitude * e^{-rate t}; rate 0 gives a constant
//   power          amplitude * |t - center|^beta
//   sequence       (sum_n |amp_n e^{-rate_n t}|^r)^{1/r}, one ExpMode per coordinate
//   piecewise_log  offsets[i] + slopes[i] * ln t on (breaks[i], breaks[i+1])
class SampledFunction {
 public:
  static SampledFunction step(std::vector<double> breaks, std::vector<double> values);
  static SampledFunction exp(double amplitude, double rate, double a = 0.0, double b = kInf);
  static SampledFunction constant(double c, double a, double b) { return exp(c, 0.0, a, b); }
  static SampledFunction power(double amplitude, double center, double beta, double a, double b);
  // tail_bound: certified bound on the l^r norm of discarded coordinates
  // (carried into diagnostics, 0 for exactly finite sequences).
  static SampledFunction sequence(std::vector<ExpMode> modes, double r, double a = 0.0, double b = kInf,
                                  double tail_bound = 0.0);
  static SampledFunction piecewise_log(std::vector<double> breaks, std::vector<double> offsets,
                                       std::vector<double> slopes);
  static SampledFunction zero(double a, double b) { return constant(0.0, a, b); }

  FunctionKind kind() const { return kind_; }
  double lower() const { return a_; }
  double upper() const { return b_; }
  double length() const { return b_ - a_; }

  // Signed value for scalar kinds, the l^r norm for sequences.  Zero outside
  // the open domain.
  double value(double t) const;
  // Pointwise norm |f(t)| (or ||f(t)||_{l^r}).
  double norm_at(double t) const;
  // Essential supremum of the pointwise norm (may be +inf).
  double ess_sup() const;
  bool is_zero() const;
  // Breakpoints where the pointwise norm may be non-smooth, including the
  // finite domain endpoints.
  std::vector<double> breakpoints() const;
  // ||f(t)|| nonincreasing on the domain (known structurally).
  bool norm_nonincreasing() const;

  // Kind-specific data.
  const std::vector<double>& breaks() const { return breaks_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& slopes() const { return slopes_; }
  double amplitude() const { return amplitude_; }
  double rate() const { return rate_; }
  double center() const { return center_; }
  double beta() const { return beta_; }
  const std::vector<ExpMode>& modes() const { return modes_; }
  double r() const { return r_; }
  double tail_bound() const { return tail_bound_; }
  // Smallest decay rate over coordinates with nonzero amplitude.
  double min_rate() const;

  // Scalar multiple.
  SampledFunction scaled(double c) const;
  std::string describe() const;

 private:
  FunctionKind kind_ = FunctionKind::step;
  double a_ = 0, b_ = 0;
  std::vector<double> breaks_, values_, slopes_;
  double amplitude_ = 0, rate_ = 0, center_ = 0, beta_ = 0;
  std::vector<ExpMode> modes_;
  double r_ = 1, tail_bound_ = 0;
};

// Integral of the pointwise norm over [lo, hi] intersected with the domain.
double integrate_norm(const SampledFunction& f, double lo, double hi);

// Sum of two step functions on the union of their breakpoints.
SampledFunction add_steps(const SampledFunction& f, const SampledFunction& g, double cf = 1.0, double cg = 1.0);

// Merged sorted breakpoints of several step functions.
std::vector<double> merge_breaks(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace orlicz

#endif
