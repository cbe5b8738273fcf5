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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aaqst/measure.hpp"
#include "aaqst/pulseseq.hpp"

namespace aaqst {

// One row of the constraint matrix: the Re or Im quadrature of one spectral
// line of one experiment.  When overlap merging is active a row covers every
// (qubit, nu) line of its overlap group.
struct RowId {
  enum class Quad { Re, Im };
  int experiment = 1;  // 1-based
  Quad quad = Quad::Re;
  std::vector<std::pair<int, long>> lines;  // (qubit, nu), >= 1 entries

  std::string name() const;
};

// Real matrix mapping the N^2-1 state unknowns to stacked line intensities.
// Row order: all Re rows then all Im rows, each block by (experiment, qubit,
// nu).  Column order matches UnknownVector.
struct ConstraintMatrix {
  RMatrix values;
  std::vector<RowId> row_map;
  std::vector<UnknownId> col_map;

  long rows() const { return values.rows(); }
  long cols() const { return values.cols(); }
};

struct ConditioningReport {
  RVector singular_values;  // descending
  long rank = 0;
  double tolerance = 0.0;   // threshold used for the rank count
  bool full_column_rank = false;
  double condition = 0.0;   // sigma_max / sigma_(N^2-1); +inf if rank deficient
};

struct BuildOptions {
  // When > 0, rows whose line frequencies fall within this width of each
  // other are summed into one row per overlap group, which is what a
  // spectrometer would record.
  double merge_linewidth_hz = 0.0;
};

// Constraint matrix via probe states: each unknown's basis matrix is
// embedded, evolved under every experiment unitary, and measured; the
// stacked intensities form that unknown's column.  This path reuses the
// measure module end to end, so it is consistent by construction with
// simulated spectra.
ConstraintMatrix build_probe(const SpinSystem& sys, const RegisterLayout& layout,
                             const std::vector<PulseSequence>& sequences,
                             const BuildOptions& opts = {});

// Same contract, computed directly from matrix elements of the synthesized
// unitaries (the known-constants route).  Kept independent of build_probe
// as a cross-check oracle.
ConstraintMatrix build_direct(const SpinSystem& sys, const RegisterLayout& layout,
                              const std::vector<PulseSequence>& sequences,
                              const BuildOptions& opts = {});

// Singular value decomposition diagnostics.  Rank is counted at
// max(rows, cols) * sigma_max * 1e-12; rank deficiency is reported, never
// thrown.
ConditioningReport conditioning(const ConstraintMatrix& m);
ConditioningReport conditioning(const RMatrix& values);

// Row grouping shared by the builders and the reconstruction stacker:
// singleton groups in canonical (qubit, nu) order, or merged overlap groups
// when merge_linewidth_hz > 0.
std::vector<std::vector<std::size_t>> line_groups(
    const std::vector<TransitionIndex>& lines, double merge_linewidth_hz);

}  // namespace aaqst
