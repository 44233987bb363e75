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
#ifndef ORLICZ_REARRANGE_HPP
#define ORLICZ_REARRANGE_HPP

#include <utility>
#include <vector>

#include "orlicz/norms.hpp"

namespace orlicz {

// Decreasing rearrangement f* of ||f|| on (0, |domain|).
struct Rearrangement {
  SampledFunction source;
  SampledFunction fstar;
  // (level, measure of the set where ||f|| >= level), levels descending.
  // Only populated for step inputs.
  std::vector<std::pair<double, double>> distribution;

  // lambda([||f|| > s]) read off the table; step inputs only.
  double distribution_at(double s) const;
};

// lambda([||f|| > s]) computed directly from the pieces of a step function.
double distribution_function(const SampledFunction& f, double s);

// Step inputs are sorted by value (ties merged); closed forms whose norm is
// monotone are translated or reflected.  Anything else is unsupported.
Rearrangement decreasing_rearrangement(const SampledFunction& f);

// sup_t f*(t) / Phi^{-1}(1/t); +inf when the ratio grows without bound.
NormResult weak_orlicz_norm(const SampledFunction& f, const YoungFunction& phi);

struct HardyLittlewood {
  double lhs = 0;    // int |f| |g|
  double rhs = 0;    // int f* g*
  double slack = 0;  // (rhs - lhs) / rhs, 0 when both vanish
};

// Step functions on a common finite domain.
HardyLittlewood hardy_littlewood_check(const SampledFunction& f, const SampledFunction& g);

}  // namespace orlicz

#endif
