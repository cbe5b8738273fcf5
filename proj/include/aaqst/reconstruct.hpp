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
#include <optional>

#include "aaqst/constraint.hpp"

namespace aaqst {

struct ReconstructionResult {
  DeviationDensityMatrix rho;
  UnknownVector unknowns;
  double residual_norm = 0.0;   // ||M x - s||_2
  ConditioningReport condition;
  RVector sensitivity;          // diag of the pseudo-inverse gram, per unknown
};

struct ExperimentPlan {
  int n_input = 1;
  int n_ancilla = 0;
  long k_min = 1;
  bool rank_verified = false;
};

// Least-squares solution of M x = s by singular value decomposition,
// truncated at the conditioning tolerance.  Throws IdentifiabilityError
// (carrying the null-space dimension) when rank < N^2-1.
ReconstructionResult solve(const ConstraintMatrix& m, const RVector& intensities);

// Stacks K peak lists into the right-hand-side vector: all Re parts by
// (experiment, qubit, nu), then all Im parts, overlap groups summed when
// merging is active.  Each list must match the canonical transition set.
RVector stack_intensities(const std::vector<PeakList>& peak_lists,
                          const SpinSystem& sys, const RegisterLayout& layout,
                          const BuildOptions& opts = {});

// End-to-end reconstruction: probe-built constraint matrix + stacked
// intensities + least-squares solve.
ReconstructionResult tomo(const SpinSystem& sys, const RegisterLayout& layout,
                          const std::vector<PulseSequence>& sequences,
                          const std::vector<PeakList>& peak_lists,
                          const BuildOptions& opts = {});

// Counting bound K_min = ceil((N^2-1) / (n_total * dim_total)).
ExperimentPlan plan(int n_input, int n_ancilla);

// Counting bound plus an achievability check: optimizes K_min two-delay
// experiments on the given system and verifies rank(M) >= N^2-1,
// incrementing K up to the ancilla-free bound if the rank check fails.
ExperimentPlan plan_verified(const SpinSystem& sys, const RegisterLayout& layout,
                             double phase1_rad, double phase2_rad,
                             std::pair<double, double> delay_bounds_s,
                             std::uint64_t seed);

}  // namespace aaqst
