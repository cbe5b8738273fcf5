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

#include "aaqst/constraint.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace aaqst {

std::string RowId::name() const {
  std::ostringstream os;
  os << "k" << experiment << "_" << (quad == Quad::Re ? "Re" : "Im") << "_";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) os << "+";
    os << "j" << lines[i].first << "nu" << lines[i].second;
  }
  return os.str();
}

std::vector<std::vector<std::size_t>> line_groups(
    const std::vector<TransitionIndex>& lines, double merge_linewidth_hz) {
  std::vector<std::vector<std::size_t>> groups;
  if (merge_linewidth_hz > 0.0) {
    const auto overlaps = check_resolution(lines, merge_linewidth_hz);
    std::vector<long> group_of(lines.size(), -1);
    for (std::size_t g = 0; g < overlaps.size(); ++g)
      for (std::size_t idx : overlaps[g]) group_of[idx] = static_cast<long>(g);
    // Keep canonical (qubit, nu) order keyed by each group's first member.
    std::vector<bool> emitted(overlaps.size(), false);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (group_of[i] < 0) {
        groups.push_back({i});
      } else if (!emitted[static_cast<std::size_t>(group_of[i])]) {
        emitted[static_cast<std::size_t>(group_of[i])] = true;
        groups.push_back(overlaps[static_cast<std::size_t>(group_of[i])]);
      }
    }
  } else {
    groups.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) groups.push_back({i});
  }
  return groups;
}

namespace {

// Probe basis matrix of one unknown on the input register.
CMatrix probe_matrix(long dim, const UnknownId& id) {
  CMatrix p = CMatrix::Zero(dim, dim);
  switch (id.kind) {
    case UnknownId::Kind::Diag:
      p(id.m, id.m) = 1.0;
      p(dim - 1, dim - 1) = -1.0;
      break;
    case UnknownId::Kind::Real:
      p(id.m, id.mp) = 1.0;
      p(id.mp, id.m) = 1.0;
      break;
    case UnknownId::Kind::Imag:
      p(id.m, id.mp) = cxd(0.0, 1.0);
      p(id.mp, id.m) = cxd(0.0, -1.0);
      break;
  }
  return p;
}

struct RowPlan {
  std::vector<TransitionIndex> lines;
  std::vector<std::vector<std::size_t>> groups;  // per experiment, same plan
  long rows_per_quad(long experiments) const {
    return static_cast<long>(groups.size()) * experiments;
  }
};

RowPlan make_row_plan(const SpinSystem& sys, const RegisterLayout& layout,
                      const BuildOptions& opts) {
  RowPlan plan;
  plan.lines = transitions(sys, layout);
  plan.groups = line_groups(plan.lines, opts.merge_linewidth_hz);
  return plan;
}

std::vector<RowId> make_row_map(const RowPlan& plan, long experiments) {
  std::vector<RowId> rows;
  rows.reserve(static_cast<std::size_t>(2 * plan.rows_per_quad(experiments)));
  for (RowId::Quad quad : {RowId::Quad::Re, RowId::Quad::Im}) {
    for (long k = 1; k <= experiments; ++k) {
      for (const auto& group : plan.groups) {
        RowId row;
        row.experiment = static_cast<int>(k);
        row.quad = quad;
        for (std::size_t idx : group)
          row.lines.emplace_back(plan.lines[idx].qubit, plan.lines[idx].nu);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<UnknownId> make_col_map(long dim) {
  std::vector<UnknownId> cols;
  const long count = unknown_count(dim);
  cols.reserve(static_cast<std::size_t>(count));
  for (long c = 0; c < count; ++c) cols.push_back(unknown_for_column(dim, c));
  return cols;
}

std::vector<CMatrix> synthesize_all(const SpinSystem& sys,
                                    const RegisterLayout& layout,
                                    const std::vector<PulseSequence>& sequences) {
  if (sequences.empty()) throw ValidationError("at least one experiment is required");
  std::vector<CMatrix> units;
  units.reserve(sequences.size());
  for (const auto& seq : sequences) units.push_back(synthesize(seq, sys, layout));
  return units;
}

}  // namespace

ConstraintMatrix build_probe(const SpinSystem& sys, const RegisterLayout& layout,
                             const std::vector<PulseSequence>& sequences,
                             const BuildOptions& opts) {
  const auto units = synthesize_all(sys, layout, sequences);
  const auto plan = make_row_plan(sys, layout, opts);
  const long experiments = static_cast<long>(sequences.size());
  const long dim_in = layout.dim_input();
  const long cols = unknown_count(dim_in);
  const long rows_per_quad = plan.rows_per_quad(experiments);
  const long groups_per_exp = static_cast<long>(plan.groups.size());

  ConstraintMatrix m;
  m.values = RMatrix::Zero(2 * rows_per_quad, cols);
  m.row_map = make_row_map(plan, experiments);
  m.col_map = make_col_map(dim_in);

  for (long col = 0; col < cols; ++col) {
    const auto probe =
        DeviationDensityMatrix{probe_matrix(dim_in, m.col_map[static_cast<std::size_t>(col)])};
    const auto embedded = embed(probe, layout);
    for (long k = 0; k < experiments; ++k) {
      const auto evolved = evolve(embedded, units[static_cast<std::size_t>(k)]);
      const auto peaks = measure_lines(evolved, sys, layout);
      for (long g = 0; g < groups_per_exp; ++g) {
        cxd sum = 0.0;
        for (std::size_t idx : plan.groups[static_cast<std::size_t>(g)])
          sum += peaks.entries[idx].intensity;
        m.values(k * groups_per_exp + g, col) = sum.real();
        m.values(rows_per_quad + k * groups_per_exp + g, col) = sum.imag();
      }
    }
  }
  return m;
}

ConstraintMatrix build_direct(const SpinSystem& sys, const RegisterLayout& layout,
                              const std::vector<PulseSequence>& sequences,
                              const BuildOptions& opts) {
  const auto units = synthesize_all(sys, layout, sequences);
  const auto plan = make_row_plan(sys, layout, opts);
  const long experiments = static_cast<long>(sequences.size());
  const long dim_in = layout.dim_input();
  const long dim_anc = layout.dim_ancilla();
  const long cols = unknown_count(dim_in);
  const long rows_per_quad = plan.rows_per_quad(experiments);
  const long groups_per_exp = static_cast<long>(plan.groups.size());
  const double weight = 1.0 / static_cast<double>(dim_anc);

  ConstraintMatrix m;
  m.values = RMatrix::Zero(2 * rows_per_quad, cols);
  m.row_map = make_row_map(plan, experiments);
  m.col_map = make_col_map(dim_in);

  for (long k = 0; k < experiments; ++k) {
    const CMatrix& u = units[static_cast<std::size_t>(k)];
    for (long g = 0; g < groups_per_exp; ++g) {
      // G(m, m') = (1/dim_anc) sum_a <j_nu|U|m, a> conj(<j'_nu|U|m', a>),
      // accumulated over the group's lines.
      CMatrix gram = CMatrix::Zero(dim_in, dim_in);
      for (std::size_t idx : plan.groups[static_cast<std::size_t>(g)]) {
        const auto& line = plan.lines[idx];
        for (long mm = 0; mm < dim_in; ++mm)
          for (long mmp = 0; mmp < dim_in; ++mmp)
            for (long a = 0; a < dim_anc; ++a)
              gram(mm, mmp) += weight * u(line.lower, mm * dim_anc + a) *
                               std::conj(u(line.upper, mmp * dim_anc + a));
      }
      const long row_re = k * groups_per_exp + g;
      const long row_im = rows_per_quad + row_re;
      for (long col = 0; col < cols; ++col) {
        const auto& id = m.col_map[static_cast<std::size_t>(col)];
        cxd val;
        switch (id.kind) {
          case UnknownId::Kind::Diag:
            val = gram(id.m, id.m) - gram(dim_in - 1, dim_in - 1);
            break;
          case UnknownId::Kind::Real:
            val = gram(id.m, id.mp) + gram(id.mp, id.m);
            break;
          case UnknownId::Kind::Imag:
            val = cxd(0.0, 1.0) * (gram(id.m, id.mp) - gram(id.mp, id.m));
            break;
        }
        m.values(row_re, col) = val.real();
        m.values(row_im, col) = val.imag();
      }
    }
  }
  return m;
}

ConditioningReport conditioning(const RMatrix& values) {
  if (values.size() == 0) throw ValidationError("conditioning of an empty matrix");
  Eigen::JacobiSVD<RMatrix> svd(values);
  ConditioningReport report;
  report.singular_values = svd.singularValues();
  const double sigma_max = report.singular_values(0);
  report.tolerance =
      static_cast<double>(std::max(values.rows(), values.cols())) * sigma_max * 1e-12;
  report.rank = 0;
  for (long i = 0; i < report.singular_values.size(); ++i)
    if (report.singular_values(i) > report.tolerance) ++report.rank;
  report.full_column_rank = report.rank >= values.cols();
  if (report.full_column_rank) {
    report.condition = sigma_max / report.singular_values(values.cols() - 1);
  } else {
    report.condition = std::numeric_limits<double>::infinity();
  }
  return report;
}

ConditioningReport conditioning(const ConstraintMatrix& m) {
  return conditioning(m.values);
}

}  // namespace aaqst
