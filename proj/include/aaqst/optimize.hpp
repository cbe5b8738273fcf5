// Copyright 2026 The AAQST Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aaqst/constraint.hpp"

namespace aaqst {

// Two-delay tomography template with fixed pulse phases; only the delay
// durations are free parameters.
struct DelayTemplate {
  double phase1_rad = 0.0;
  double phase2_rad = 0.0;
  TargetSpec targets = TargetSpec::all();

  // "two-delay-xy" (phases x, y) or "two-delay-xx" (phases x, x).
  static DelayTemplate from_id(const std::string& id);
  std::string id() const;

  int params_per_experiment() const { return 2; }
  PulseSequence instantiate(double tau1_s, double tau2_s) const;
  // One sequence per experiment from a flat parameter vector
  // (tau1, tau2 per experiment, experiments consecutive).
  std::vector<PulseSequence> sequences(std::span<const double> params) const;
};

struct OptimizerConfig {
  int population = 40;
  int generations = 60;
  int tournament = 3;
  int elitism = 2;
  double mutation_sigma = 0.05;  // fraction of the parameter range
  double crossover_rate = 0.7;
  std::pair<double, double> bounds_s{1e-4, 20e-3};
  std::uint64_t seed = 0;

  void validate() const;
};

// Rank-deficient candidates receive this finite sentinel fitness so
// selection pressure still orders the population.
inline constexpr double kRankDeficientFitness = 1e12;

struct GenerationStat {
  int generation = 0;
  double best_condition = 0.0;
  double mean_condition = 0.0;
};

struct OptimizeResult {
  std::vector<double> params;  // delays in seconds
  ConditioningReport report;
  std::vector<GenerationStat> log;
};

// Genetic-algorithm minimization of the condition number C(M) of the
// probe-built constraint matrix over the template delays; per-experiment
// delays vary independently.  Deterministic per config seed.  Throws
// OptimizationError if every candidate of every generation was
// rank-deficient.
OptimizeResult optimize_delays(const SpinSystem& sys, const RegisterLayout& layout,
                               const DelayTemplate& tmpl, int experiments,
                               const OptimizerConfig& config);

// Exhaustive evaluation on a uniform grid (oracle for the GA).  Limited to
// three parameters, i.e. one two-delay experiment; bit-exact reproducible.
OptimizeResult grid_search(const SpinSystem& sys, const RegisterLayout& layout,
                           const DelayTemplate& tmpl, int experiments,
                           int grid_points, std::pair<double, double> bounds_s);

}  // namespace aaqst
