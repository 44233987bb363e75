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
#ifndef ORLICZ_SPEC_LANGUAGE_HPP
#define ORLICZ_SPEC_LANGUAGE_HPP

#include <functional>
#include <string>
#include <vector>

#include "orlicz/diagsys.hpp"

// Text specs shared by the command line and suite configs.
//
//   phi       power:p | classp:p,q,RHO | expm1t | conjugate-of:PHI
//   RHO       one | id | min1 | log1p | pow:r | affine:a,b,RHO,RHO | compose:RHO,RHO
//   function  exp:A,rate | const:c | pow:A,beta | file:PATH   (on (0, tau))
//   system    diag:rule=EXPR,N=int,r=real[,weights=default|v1;v2;...|scaled:g]
//             diag:eig=l1;l2;...,r=real[,weights=...]
//
// EXPR is arithmetic in n = 1, 2, ... with + - * / ^, parentheses and
// log, log1p, exp, sqrt, abs.  All parse failures throw ParseError.

namespace orlicz {

double parse_real(const std::string& text);
long parse_integer(const std::string& text);

RhoFunction parse_rho(const std::string& spec);
YoungFunction parse_phi(const std::string& spec);

std::function<double(double)> parse_rule(const std::string& expr);

SampledFunction parse_function(const std::string& spec, double tau);

// Step function CSV: one "left,right,value" row per piece, optional header.
SampledFunction read_step_csv(const std::string& path);
std::string step_csv(const SampledFunction& f);

struct SystemSpec {
  std::string rule;                 // empty when eigenvalues are listed
  std::vector<double> eigenvalues;  // listed eigenvalues
  long N = 0;
  double r = 2;
  enum class Weights { default_rule, scaled, list } weights = Weights::default_rule;
  double scale = 1;
  std::vector<double> weight_list;
};

SystemSpec parse_system_spec(const std::string& spec);
DiagonalSystem build_system(const SystemSpec& spec, const YoungFunction& phi);
DiagonalSystem parse_system(const std::string& spec, const YoungFunction& phi);

}  // namespace orlicz

#endif
