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

#include "aaqst/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace aaqst {

DelayTemplate DelayTemplate::from_id(const std::string& id) {
  if (id == "two-delay-xy") return DelayTemplate{0.0, kPi / 2.0};
  if (id == "two-delay-xx") return DelayTemplate{0.0, 0.0};
  throw ValidationError("unknown template id '" + id +
                        "' (expected two-delay-xy or two-delay-xx)");
}

std::string DelayTemplate::id() const {
  if (phase1_rad == 0.0 && phase2_rad == kPi / 2.0) return "two-delay-xy";
  if (phase1_rad == 0.0 && phase2_rad == 0.0) return "two-delay-xx";
  return "two-delay-custom";
}

PulseSequence DelayTemplate::instantiate(double tau1_s, double tau2_s) const {
  return template_two_delay(tau1_s, tau2_s, phase1_rad, phase2_rad, targets);
}

std::vector<PulseSequence> DelayTemplate::sequences(
    std::span<const double> params) const {
  if (params.empty() || params.size() % 2 != 0)
    throw ValidationError("two-delay template needs two delays per experiment");
  std::vector<PulseSequence> out;
  out.reserve(params.size() / 2);
  for (std::size_t i = 0; i < params.size(); i += 2)
    out.push_back(instantiate(params[i], params[i + 1]));
  return out;
}

void OptimizerConfig::validate() const {
  if (population < 2) throw ValidationError("population must be >= 2");
  if (generations < 1) throw ValidationError("generations must be >= 1");
  if (tournament < 1 || tournament > population)
    throw ValidationError("tournament size out of range");
  if (elitism < 0 || elitism >= population)
    throw ValidationError("elitism count out of range");
  if (!(bounds_s.first < bounds_s.second) && bounds_s.first != bounds_s.second)
    throw ValidationError("delay bounds must satisfy min <= max");
  if (bounds_s.first < 0.0) throw ValidationError("delay bounds must be >= 0");
  if (crossover_rate < 0.0 || crossover_rate > 1.0)
    throw ValidationError("crossover rate must lie in [0, 1]");
  if (mutation_sigma < 0.0) throw ValidationError("mutation sigma must be >= 0");
}

namespace {

struct Evaluation {
  double fitness = kRankDeficientFitness;
  ConditioningReport report;
};

Evaluation evaluate(const SpinSystem& sys, const RegisterLayout& layout,
                    const DelayTemplate& tmpl, std::span<const double> params) {
  Evaluation ev;
  ev.report = conditioning(build_probe(sys, layout, tmpl.sequences(params)));
  ev.fitness = ev.report.full_column_rank && std::isfinite(ev.report.condition)
                   ? ev.report.condition
                   : kRankDeficientFitness;
  return ev;
}

}  // namespace

OptimizeResult optimize_delays(const SpinSystem& sys, const RegisterLayout& layout,
                               const DelayTemplate& tmpl, int experiments,
                               const OptimizerConfig& config) {
  config.validate();
  if (experiments < 1) throw ValidationError("experiment count must be >= 1");
  const int genes = tmpl.params_per_experiment() * experiments;
  const auto [lo, hi] = config.bounds_s;
  const double range = hi - lo;
  Rng rng(config.seed);

  std::vector<std::vector<double>> population(
      static_cast<std::size_t>(config.population));
  for (auto& candidate : population) {
    candidate.resize(static_cast<std::size_t>(genes));
    for (auto& gene : candidate) gene = rng.uniform(lo, hi);
  }

  std::vector<double> fitness(population.size());
  auto evaluate_population = [&] {
    for (std::size_t i = 0; i < population.size(); ++i)
      fitness[i] = evaluate(sys, layout, tmpl, population[i]).fitness;
  };
  evaluate_population();

  std::vector<double> best_params;
  double best_fitness = kRankDeficientFitness;
  std::vector<GenerationStat> log;
  auto record = [&](int generation) {
    double best = kRankDeficientFitness;
    std::size_t best_idx = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < fitness.size(); ++i) {
      if (fitness[i] < best) {
        best = fitness[i];
        best_idx = i;
      }
      sum += fitness[i];
    }
    if (best < best_fitness) {
      best_fitness = best;
      best_params = population[best_idx];
    }
    log.push_back({generation, best_fitness,
                   sum / static_cast<double>(fitness.size())});
  };
  record(0);

  auto tournament_pick = [&]() -> const std::vector<double>& {
    std::size_t winner = static_cast<std::size_t>(rng.integer(population.size()));
    for (int t = 1; t < config.tournament; ++t) {
      const std::size_t rival = static_cast<std::size_t>(rng.integer(population.size()));
      if (fitness[rival] < fitness[winner]) winner = rival;
    }
    return population[winner];
  };

  for (int generation = 1; generation <= config.generations; ++generation) {
    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fitness[a] < fitness[b]; });
    std::vector<std::vector<double>> next;
    next.reserve(population.size());
    for (int e = 0; e < config.elitism; ++e)
      next.push_back(population[order[static_cast<std::size_t>(e)]]);
    while (next.size() < population.size()) {
      std::vector<double> child = tournament_pick();
      if (rng.uniform() < config.crossover_rate) {
        const auto& other = tournament_pick();
        for (std::size_t g = 0; g < child.size(); ++g) {
          const double alpha = rng.uniform();
          child[g] = alpha * child[g] + (1.0 - alpha) * other[g];
        }
      }
      for (auto& gene : child) {
        gene += config.mutation_sigma * range * rng.gaussian();
        gene = std::clamp(gene, lo, hi);
      }
      next.push_back(std::move(child));
    }
    population = std::move(next);
    evaluate_population();
    record(generation);
  }

  if (best_fitness >= kRankDeficientFitness) {
    throw OptimizationError(
        "no full-rank constraint matrix found in " +
        std::to_string(config.generations) + " generations (population " +
        std::to_string(config.population) + ", K=" + std::to_string(experiments) +
        "); consider more experiments or a larger ancilla");
  }

  OptimizeResult result;
  result.params = best_params;
  result.report = evaluate(sys, layout, tmpl, best_params).report;
  result.log = std::move(log);
  return result;
}

OptimizeResult grid_search(const SpinSystem& sys, const RegisterLayout& layout,
                           const DelayTemplate& tmpl, int experiments,
                           int grid_points, std::pair<double, double> bounds_s) {
  if (experiments < 1) throw ValidationError("experiment count must be >= 1");
  if (grid_points < 2) throw ValidationError("grid needs at least 2 points per dim");
  const int genes = tmpl.params_per_experiment() * experiments;
  if (genes > 3)
    throw ValidationError("grid search limited to 3 parameters (" +
                          std::to_string(genes) + " requested)");
  const auto [lo, hi] = bounds_s;
  if (!(lo <= hi)) throw ValidationError("delay bounds must satisfy min <= max");

  std::vector<double> axis(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i)
    axis[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_points - 1);

  std::vector<double> point(static_cast<std::size_t>(genes), lo);
  std::vector<double> best_point;
  double best_fitness = kRankDeficientFitness;
  Evaluation best_eval;

  std::vector<int> idx(static_cast<std::size_t>(genes), 0);
  while (true) {
    for (int g = 0; g < genes; ++g)
      point[static_cast<std::size_t>(g)] = axis[static_cast<std::size_t>(idx[static_cast<std::size_t>(g)])];
    const Evaluation ev = evaluate(sys, layout, tmpl, point);
    if (ev.fitness < best_fitness) {
      best_fitness = ev.fitness;
      best_point = point;
      best_eval = ev;
    }
    // odometer increment, last axis fastest
    int g = genes - 1;
    while (g >= 0 && ++idx[static_cast<std::size_t>(g)] == grid_points) {
      idx[static_cast<std::size_t>(g)] = 0;
      --g;
    }
    if (g < 0) break;
  }

  if (best_fitness >= kRankDeficientFitness)
    throw OptimizationError("every grid point produced a rank-deficient constraint matrix");

  OptimizeResult result;
  result.params = best_point;
  result.report = best_eval.report;
  return result;
}

}  // namespace aaqst
