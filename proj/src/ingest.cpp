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

#include "aaqst/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace aaqst {

void SpectrumTrace::validate() const {
  if (samples.size() < 2) throw ValidationError("trace needs at least 2 samples");
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (!(samples[i].frequency_hz > samples[i - 1].frequency_hz))
      throw ValidationError("trace frequencies must be strictly increasing");
  if (linewidth_hz <= 0.0) throw ValidationError("trace linewidth must be positive");
}

cxd lorentzian(double f_hz, double f_center_hz, double linewidth_hz) {
  const double half_width = linewidth_hz / 2.0;
  return 1.0 / cxd(1.0, (f_hz - f_center_hz) / half_width);
}

PeakList fit_amplitudes(const SpectrumTrace& trace,
                        const std::vector<TransitionIndex>& lines,
                        double linewidth_hz) {
  trace.validate();
  if (lines.empty()) throw ValidationError("no transitions to fit");
  if (linewidth_hz <= 0.0) throw ValidationError("linewidth must be positive");
  const double f_lo = trace.samples.front().frequency_hz;
  const double f_hi = trace.samples.back().frequency_hz;
  for (const auto& line : lines) {
    if (line.frequency_hz < f_lo || line.frequency_hz > f_hi) {
      std::ostringstream os;
      os << "transition (j=" << line.qubit << ", nu=" << line.nu << ") at "
         << line.frequency_hz << " Hz lies outside the trace span [" << f_lo
         << ", " << f_hi << "] Hz";
      throw ValidationError(os.str());
    }
  }

  const long s = static_cast<long>(trace.samples.size());
  const long t = static_cast<long>(lines.size());
  CMatrix basis(s, t);
  CVector data(s);
  for (long i = 0; i < s; ++i) {
    data(i) = trace.samples[static_cast<std::size_t>(i)].value;
    for (long j = 0; j < t; ++j)
      basis(i, j) = lorentzian(trace.samples[static_cast<std::size_t>(i)].frequency_hz,
                               lines[static_cast<std::size_t>(j)].frequency_hz,
                               linewidth_hz);
  }

  Eigen::JacobiSVD<CMatrix> svd(basis, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cond = sv(0) / sv(sv.size() - 1);
  if (!(cond <= 1e8)) {
    // Name the closest pair; that is where the basis collapsed.
    std::size_t pa = 0, pb = 1;
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < lines.size(); ++a)
      for (std::size_t b = a + 1; b < lines.size(); ++b) {
        const double d = std::abs(lines[a].frequency_hz - lines[b].frequency_hz);
        if (d < gap) {
          gap = d;
          pa = a;
          pb = b;
        }
      }
    std::ostringstream os;
    os << "Lorentzian basis condition number " << cond
       << " exceeds 1e8; transitions (j=" << lines[pa].qubit << ", nu=" << lines[pa].nu
       << ") and (j=" << lines[pb].qubit << ", nu=" << lines[pb].nu
       << ") overlap too severely to separate (gap " << gap << " Hz)";
    throw ValidationError(os.str());
  }
  CVector amplitudes = svd.solve(data);
  if (trace.reference_scale) amplitudes *= *trace.reference_scale;

  PeakList peaks;
  peaks.entries.reserve(lines.size());
  for (long j = 0; j < t; ++j) {
    const auto& line = lines[static_cast<std::size_t>(j)];
    peaks.entries.push_back(Peak{line.qubit, line.nu, line.frequency_hz, amplitudes(j)});
  }
  return peaks;
}

SpectrumTrace synthesize_trace(const PeakList& peaks, double linewidth_hz,
                               const TraceGrid& grid) {
  if (linewidth_hz <= 0.0) throw ValidationError("linewidth must be positive");
  if (grid.count < 2) throw ValidationError("trace grid needs at least 2 points");
  if (!(grid.f_min_hz < grid.f_max_hz))
    throw ValidationError("trace grid span is empty");
  for (const auto& p : peaks.entries) {
    if (p.frequency_hz < grid.f_min_hz || p.frequency_hz > grid.f_max_hz)
      throw ValidationError("trace grid does not cover peak at " +
                            std::to_string(p.frequency_hz) + " Hz");
  }
  SpectrumTrace trace;
  trace.linewidth_hz = linewidth_hz;
  trace.samples.resize(static_cast<std::size_t>(grid.count));
  const double step = (grid.f_max_hz - grid.f_min_hz) / static_cast<double>(grid.count - 1);
  for (long i = 0; i < grid.count; ++i) {
    const double f = grid.f_min_hz + step * static_cast<double>(i);
    cxd v = 0.0;
    for (const auto& p : peaks.entries) v += p.intensity * lorentzian(f, p.frequency_hz, linewidth_hz);
    trace.samples[static_cast<std::size_t>(i)] = {f, v};
  }
  return trace;
}

}  // namespace aaqst
