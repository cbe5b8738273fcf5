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

#include "aaqst/reconstruct.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "aaqst/optimize.hpp"

namespace aaqst {

ReconstructionResult solve(const ConstraintMatrix& m, const RVector& intensities) {
  if (m.values.size() == 0) throw ValidationError("empty constraint matrix");
  if (intensities.size() != m.rows())
    throw ValidationError("intensity vector length " + std::to_string(intensities.size()) +
                          " does not match constraint rows " + std::to_string(m.rows()));

  Eigen::JacobiSVD<RMatrix> svd(m.values, Eigen::ComputeThinU | Eigen::ComputeThinV);
  ConditioningReport report;
  report.singular_values = svd.singularValues();
  const double sigma_max = report.singular_values(0);
  report.tolerance =
      static_cast<double>(std::max(m.rows(), m.cols())) * sigma_max * 1e-12;
  report.rank = 0;
  for (long i = 0; i < report.singular_values.size(); ++i)
    if (report.singular_values(i) > report.tolerance) ++report.rank;
  report.full_column_rank = report.rank >= m.cols();
  report.condition = report.full_column_rank
                         ? sigma_max / report.singular_values(m.cols() - 1)
                         : std::numeric_limits<double>::infinity();

  if (!report.full_column_rank) {
    const long nullspace = m.cols() - report.rank;
    throw IdentifiabilityError(
        "constraint matrix rank " + std::to_string(report.rank) + " < " +
            std::to_string(m.cols()) +
            " unknowns; the state is not identifiable from these experiments "
            "(null-space dimension " + std::to_string(nullspace) + ")",
        nullspace);
  }

  const RVector projected = svd.matrixU().adjoint() * intensities;
  RVector scaled = RVector::Zero(report.singular_values.size());
  for (long i = 0; i < report.singular_values.size(); ++i)
    if (report.singular_values(i) > report.tolerance)
      scaled(i) = projected(i) / report.singular_values(i);
  RVector x = svd.matrixV() * scaled;

  ReconstructionResult result{unpack(UnknownVector{x}), UnknownVector{x}, 0.0, report,
                              RVector()};
  result.residual_norm = (m.values * x - intensities).norm();
  // diag(V S^-2 V^T): noise sensitivity of each unknown
  result.sensitivity = RVector::Zero(m.cols());
  for (long c = 0; c < m.cols(); ++c) {
    double acc = 0.0;
    for (long i = 0; i < report.singular_values.size(); ++i)
      if (report.singular_values(i) > report.tolerance)
        acc += svd.matrixV()(c, i) * svd.matrixV()(c, i) /
               (report.singular_values(i) * report.singular_values(i));
    result.sensitivity(c) = acc;
  }
  return result;
}

RVector stack_intensities(const std::vector<PeakList>& peak_lists,
                          const SpinSystem& sys, const RegisterLayout& layout,
                          const BuildOptions& opts) {
  if (peak_lists.empty()) throw ValidationError("no peak lists given");
  const auto lines = transitions(sys, layout);
  const auto groups = line_groups(lines, opts.merge_linewidth_hz);
  const long k_count = static_cast<long>(peak_lists.size());
  const long g_count = static_cast<long>(groups.size());

  for (const auto& list : peak_lists) {
    if (list.entries.size() == lines.size()) {
      bool ok = true;
      for (std::size_t i = 0; i < lines.size(); ++i) {
        if (list.entries[i].qubit != lines[i].qubit || list.entries[i].nu != lines[i].nu) {
          ok = false;
          break;
        }
      }
      if (ok) continue;
    }
    // Name what is missing so a truncated file is diagnosable.
    std::ostringstream os;
    os << "peak list does not cover the canonical transition set; missing:";
    int named = 0;
    for (const auto& line : lines) {
      bool found = false;
      for (const auto& p : list.entries)
        if (p.qubit == line.qubit && p.nu == line.nu) {
          found = true;
          break;
        }
      if (!found && named < 8) {
        os << " (j=" << line.qubit << ", nu=" << line.nu << ")";
        ++named;
      }
    }
    if (named == 0) os << " none (duplicate or out-of-order rows instead)";
    throw ValidationError(os.str());
  }

  RVector rhs(2 * k_count * g_count);
  for (long k = 0; k < k_count; ++k) {
    for (long g = 0; g < g_count; ++g) {
      cxd sum = 0.0;
      for (std::size_t idx : groups[static_cast<std::size_t>(g)])
        sum += peak_lists[static_cast<std::size_t>(k)].entries[idx].intensity;
      rhs(k * g_count + g) = sum.real();
      rhs(k_count * g_count + k * g_count + g) = sum.imag();
    }
  }
  return rhs;
}

ReconstructionResult tomo(const SpinSystem& sys, const RegisterLayout& layout,
                          const std::vector<PulseSequence>& sequences,
                          const std::vector<PeakList>& peak_lists,
                          const BuildOptions& opts) {
  if (sequences.size() != peak_lists.size())
    throw ValidationError("sequence count " + std::to_string(sequences.size()) +
                          " does not match peak list count " +
                          std::to_string(peak_lists.size()));
  const auto m = build_probe(sys, layout, sequences, opts);
  const auto rhs = stack_intensities(peak_lists, sys, layout, opts);
  return solve(m, rhs);
}

ExperimentPlan plan(int n_input, int n_ancilla) {
  const auto layout = RegisterLayout::make(n_input, n_ancilla);
  const long unknowns = unknown_count(layout.dim_input());
  const long per_experiment = layout.total_qubits() * layout.dim_total();
  ExperimentPlan p;
  p.n_input = n_input;
  p.n_ancilla = n_ancilla;
  p.k_min = (unknowns + per_experiment - 1) / per_experiment;
  return p;
}

ExperimentPlan plan_verified(const SpinSystem& sys, const RegisterLayout& layout,
                             double phase1_rad, double phase2_rad,
                             std::pair<double, double> delay_bounds_s,
                             std::uint64_t seed) {
  ExperimentPlan p = plan(layout.input_qubits(), layout.ancilla_qubits());
  const long unknowns = unknown_count(layout.dim_input());
  const long ancilla_free_rows = layout.input_qubits() * layout.dim_input();
  const long k_cap = (unknowns + ancilla_free_rows - 1) / ancilla_free_rows;

  DelayTemplate tmpl{phase1_rad, phase2_rad};
  OptimizerConfig config;
  config.population = 24;
  config.generations = 12;  // rank checking needs far less budget than tuning
  config.bounds_s = delay_bounds_s;
  config.seed = seed;

  for (long k = p.k_min; k <= std::max(k_cap, p.k_min); ++k) {
    try {
      const auto result =
          optimize_delays(sys, layout, tmpl, static_cast<int>(k), config);
      if (result.report.full_column_rank) {
        p.k_min = k;
        p.rank_verified = true;
        return p;
      }
    } catch (const OptimizationError&) {
      // rank never reached at this K; try one more experiment
    }
  }
  p.k_min = std::max(k_cap, p.k_min);
  p.rank_verified = false;
  return p;
}

}  // namespace aaqst
