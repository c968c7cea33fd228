// Copyright 2026 The semicycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEMICYCLE_REPRO_H_
#define SEMICYCLE_REPRO_H_

#include <string>

#include "semicycle/integrator.h"

namespace semicycle {

enum class Example { kExample2, kExample3, kSinPi };

Example parse_example(const std::string& name);
std::string to_string(Example which);

struct ExampleSpec {
  Example which;
  double epsilon = 0.0;
  // Number of semicycles (blocks) covered.
  int periods = 1;
};

// Block (semicycle) lengths.
double example2_period(double epsilon);
double example3_period(double epsilon);
double block_length(const ExampleSpec& spec);
// periods * block_length.
double example_horizon(const ExampleSpec& spec);

double example2_closed_form(double epsilon, double t);
double example2_closed_form_slope(double epsilon, double t);
double example3_closed_form(double epsilon, double t);
double example3_closed_form_slope(double epsilon, double t);

double closed_form(const ExampleSpec& spec, double t);
double closed_form_slope(const ExampleSpec& spec, double t);

// Piece boundaries of the closed form on [0, horizon].
std::vector<double> closed_form_junctions(const ExampleSpec& spec);

DelayProblem build_example_problem(const ExampleSpec& spec);

// A solution made of parabolic arches of alternating sign: each block of
// length rise + fall rises from zero to a peak in `rise` and falls back in
// `fall`, and successive peaks scale by q = rise / fall. The delay points
// every rise at the peak k_rise blocks back and every fall at the peak
// k_fall blocks back, with k chosen minimal so that |p| <= 1.
struct ArchConstruction {
  double rise;
  double fall;
  double ratio;
  int k_rise;
  int k_fall;
  double p_rise;
  double p_fall;
  double tau_m;
  int blocks;
  DelayProblem problem;

  double block() const { return rise + fall; }
  double horizon() const { return blocks * block(); }
  double closed_form(double t) const;
};

ArchConstruction build_contracting_arches(double rise, double fall,
                                          int blocks);

}  // namespace semicycle

#endif  // SEMICYCLE_REPRO_H_
