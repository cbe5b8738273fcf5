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

#include "aaqst/measure.hpp"

namespace aaqst {

// A frequency-domain quadrature spectrum, frequencies strictly increasing.
struct SpectrumTrace {
  struct Sample {
    double frequency_hz = 0.0;
    cxd value;
  };
  std::vector<Sample> samples;
  double linewidth_hz = 1.0;
  std::optional<double> reference_scale;

  void validate() const;
};

struct TraceGrid {
  double f_min_hz = 0.0;
  double f_max_hz = 0.0;
  long count = 0;
};

// Complex Lorentzian basis line shape centered at f_center.
cxd lorentzian(double f_hz, double f_center_hz, double linewidth_hz);

// Linear least-squares fit of one complex amplitude per transition against
// the Lorentzian basis at the known transition frequencies.  The trace's
// reference_scale, if present, multiplies the fitted amplitudes.  Throws
// when a transition lies outside the trace span or when the basis condition
// number exceeds 1e8 (overlap too severe to separate).
PeakList fit_amplitudes(const SpectrumTrace& trace,
                        const std::vector<TransitionIndex>& lines,
                        double linewidth_hz);

// Sum of complex Lorentzians on a uniform grid; inverse partner of
// fit_amplitudes up to discretization.
SpectrumTrace synthesize_trace(const PeakList& peaks, double linewidth_hz,
                               const TraceGrid& grid);

}  // namespace aaqst
