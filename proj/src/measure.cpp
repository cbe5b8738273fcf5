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

#include "aaqst/measure.hpp"

#include <cmath>

namespace aaqst {

DeviationDensityMatrix embed(const DeviationDensityMatrix& rho,
                             const RegisterLayout& layout) {
  if (rho.dim() != layout.dim_input())
    throw ValidationError("state dimension does not match the input register");
  const long nanc = layout.dim_ancilla();
  if (nanc == 1) return rho;
  const long nin = layout.dim_input();
  CMatrix out = CMatrix::Zero(nin * nanc, nin * nanc);
  const double w = 1.0 / static_cast<double>(nanc);
  for (long m = 0; m < nin; ++m)
    for (long mp = 0; mp < nin; ++mp)
      for (long a = 0; a < nanc; ++a)
        out(m * nanc + a, mp * nanc + a) = rho.entries(m, mp) * w;
  return DeviationDensityMatrix{std::move(out)};
}

DeviationDensityMatrix evolve(const DeviationDensityMatrix& rho, const CMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim())
    throw ValidationError("unitary dimension does not match state");
  const double defect =
      (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (defect > 1e-8)
    throw ValidationError("matrix is not unitary (defect " + std::to_string(defect) + ")");
  return DeviationDensityMatrix{u * rho.entries * u.adjoint()};
}

PeakList measure_lines(const DeviationDensityMatrix& rho, const SpinSystem& sys,
                       const RegisterLayout& layout) {
  if (rho.dim() != layout.dim_total())
    throw ValidationError("state dimension does not match the combined register");
  const auto lines = transitions(sys, layout);
  PeakList peaks;
  peaks.entries.reserve(lines.size());
  for (const auto& t : lines) {
    peaks.entries.push_back(
        Peak{t.qubit, t.nu, t.frequency_hz, rho.entries(t.lower, t.upper)});
  }
  return peaks;
}

PeakList add_noise(const PeakList& peaks, double sigma_rel, std::uint64_t seed) {
  if (sigma_rel < 0.0) throw ValidationError("noise level must be >= 0");
  if (sigma_rel == 0.0) return peaks;
  double peak_max = 0.0;
  for (const auto& p : peaks.entries) peak_max = std::max(peak_max, std::abs(p.intensity));
  const double sigma = sigma_rel * peak_max;
  Rng rng(seed);
  PeakList out = peaks;
  for (auto& p : out.entries)
    p.intensity += cxd(sigma * rng.gaussian(), sigma * rng.gaussian());
  return out;
}

}  // namespace aaqst
