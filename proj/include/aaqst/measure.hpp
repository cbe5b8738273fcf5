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

#include "aaqst/densmat.hpp"
#include "aaqst/model.hpp"

namespace aaqst {

struct Peak {
  int qubit = 1;
  long nu = 0;
  double frequency_hz = 0.0;
  cxd intensity;  // R + iS
};

// Complex line intensities in canonical (qubit, nu) order; exactly
// total_qubits * dim_total / 2 entries.
struct PeakList {
  std::vector<Peak> entries;
};

// rho (x) 1/dim_ancilla: the input state joined with a maximally mixed
// ancilla register.  Identity when the layout has no ancilla.
DeviationDensityMatrix embed(const DeviationDensityMatrix& rho,
                             const RegisterLayout& layout);

// U rho U^dagger.  U must be unitary to 1e-8.
DeviationDensityMatrix evolve(const DeviationDensityMatrix& rho, const CMatrix& u);

// Single-quantum matrix elements <j_nu| rho |j'_nu> as spectral intensities.
// Ideal quadrature detection: the proportionality between the transverse
// magnetization signal and the matrix element is fixed to exactly 1.
PeakList measure_lines(const DeviationDensityMatrix& rho, const SpinSystem& sys,
                       const RegisterLayout& layout);

// Adds i.i.d. Gaussian noise of standard deviation sigma_rel * max|intensity|
// to each quadrature; deterministic per seed.
PeakList add_noise(const PeakList& peaks, double sigma_rel, std::uint64_t seed);

}  // namespace aaqst
