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

#include <filesystem>
#include <vector>

#include "aaqst/io.hpp"

// Test-only oracles, kept independent of the library code paths they check.

namespace aaqst::testing {

inline CMatrix pauli_i() { return (CMatrix(2, 2) << 1, 0, 0, 1).finished(); }
inline CMatrix pauli_x() { return (CMatrix(2, 2) << 0, 1, 1, 0).finished(); }
inline CMatrix pauli_y() {
  return (CMatrix(2, 2) << 0, cxd(0, -1), cxd(0, 1), 0).finished();
}
inline CMatrix pauli_z() { return (CMatrix(2, 2) << 1, 0, 0, -1).finished(); }

// Plain loop-based Kronecker product (deliberately not Eigen's).
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      for (long k = 0; k < b.rows(); ++k)
        for (long l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Operator `op` on qubit j (1-based, MSB first) of a q-qubit register.
inline CMatrix one_qubit_op(const CMatrix& op, int j, int qubits) {
  CMatrix acc = CMatrix::Ones(1, 1);
  for (int q = 1; q <= qubits; ++q) acc = kron(acc, q == j ? op : pauli_i());
  return acc;
}

// Dense Kronecker-product construction of the weak-coupling Hamiltonian:
// H = -sum_i w_i sz_i/2 + sum_{i<j} 2 pi J_ij sz_i sz_j/4, in rad/s.
inline CMatrix dense_hamiltonian(const SpinSystem& sys) {
  const int q = sys.size();
  const long dim = sys.dim();
  CMatrix h = CMatrix::Zero(dim, dim);
  for (int i = 1; i <= q; ++i) {
    h -= kTwoPi * sys.shift_hz[static_cast<std::size_t>(i - 1)] / 2.0 *
         one_qubit_op(pauli_z(), i, q);
    for (int j = i + 1; j <= q; ++j) {
      h += kTwoPi * sys.coupling_hz(i - 1, j - 1) / 4.0 *
           (one_qubit_op(pauli_z(), i, q) * one_qubit_op(pauli_z(), j, q));
    }
  }
  return h;
}

inline SpinSystem make_system(std::vector<double> shifts,
                              std::vector<std::tuple<int, int, double>> couplings) {
  SpinSystem sys;
  const long q = static_cast<long>(shifts.size());
  sys.shift_hz = std::move(shifts);
  sys.coupling_hz = RMatrix::Zero(q, q);
  for (const auto& [i, j, v] : couplings) {
    sys.coupling_hz(i - 1, j - 1) = v;
    sys.coupling_hz(j - 1, i - 1) = v;
  }
  return sys;
}

// Weakly coupled random system: shifts spread over kilohertz, couplings a
// few tens of hertz, everything pairwise coupled.
inline SpinSystem random_system(int qubits, Rng& rng) {
  SpinSystem sys;
  for (int i = 0; i < qubits; ++i)
    sys.shift_hz.push_back((i + 1) * 1500.0 + rng.uniform(-400.0, 400.0));
  sys.coupling_hz = RMatrix::Zero(qubits, qubits);
  for (int i = 0; i < qubits; ++i)
    for (int j = i + 1; j < qubits; ++j) {
      const double v = rng.uniform(15.0, 90.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
      sys.coupling_hz(i, j) = v;
      sys.coupling_hz(j, i) = v;
    }
  return sys;
}

inline std::filesystem::path fixture_dir() {
  return std::filesystem::path(AAQST_FIXTURE_DIR);
}

inline io::SystemFile fixture_a() {
  return io::load_system(fixture_dir() / "systems" / "iodotrifluoroethylene.json");
}

inline io::SystemFile fixture_b() {
  return io::load_system(fixture_dir() / "systems" / "bromotrifluorobenzene_mbba.json");
}

// Published delays for the two fixture templates.
inline constexpr double kDelayA1 = 6.7783e-3;
inline constexpr double kDelayA2 = 8.0182e-3;
inline constexpr double kDelayB1 = 431.2e-6;
inline constexpr double kDelayB2 = 511.5e-6;

inline PulseSequence sequence_a() {
  return template_two_delay(kDelayA1, kDelayA2, 0.0, kPi / 2.0);
}

inline PulseSequence sequence_b() {
  return template_two_delay(kDelayB1, kDelayB2, 0.0, 0.0);
}

// Thermal input-register states of the two scenarios.
inline DeviationDensityMatrix thermal_a() {
  return from_pauli_terms({{0.5, "ZI"}, {0.5, "IZ"}});
}

inline DeviationDensityMatrix thermal_b() {
  return from_pauli_terms({{0.5, "ZII"}, {0.5, "IZI"}, {0.5, "IIZ"}});
}

}  // namespace aaqst::testing
