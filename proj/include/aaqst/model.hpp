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

#include <string>
#include <vector>

#include "aaqst/common.hpp"

namespace aaqst {

// Input/ancilla split of a spin register and every derived dimension.
//
// Bit convention throughout: qubit 1 is the most significant bit of a basis
// index, m = m1*2^(q-1) + ... + mq*2^0 for a q-qubit register.  Input qubits
// occupy the most significant positions of the combined register, so the
// combined basis index factors as m_input * dim_ancilla + m_ancilla.
struct RegisterLayout {
  int n_input = 1;
  int n_ancilla = 0;

  static RegisterLayout make(int n_input, int n_ancilla);

  int input_qubits() const { return n_input; }
  int ancilla_qubits() const { return n_ancilla; }
  int total_qubits() const { return n_input + n_ancilla; }
  long dim_input() const { return 1L << n_input; }
  long dim_ancilla() const { return 1L << n_ancilla; }
  long dim_total() const { return dim_input() * dim_ancilla(); }
};

// Chemical shifts and scalar couplings of a weakly coupled spin system.
// Shifts are rotating-frame offsets in Hz; coupling_hz stores plain J for
// isotropic samples and the effective J+2D value for oriented ones.
struct SpinSystem {
  std::vector<std::string> labels;
  std::vector<double> shift_hz;
  RMatrix coupling_hz;  // symmetric, zero diagonal
  std::vector<std::string> species;

  int size() const { return static_cast<int>(shift_hz.size()); }
  long dim() const { return 1L << size(); }

  // Throws ValidationError on shape mismatch, asymmetry, or nonzero diagonal.
  void validate() const;
};

// One observable single-quantum line: basis pair (lower, upper) differing
// exactly in bit `qubit`, with `upper` the bit-set state.  nu is the value
// of the remaining bits.
struct TransitionIndex {
  int qubit = 1;  // 1-based, MSB first
  long nu = 0;
  long lower = 0;
  long upper = 0;
  double frequency_hz = 0.0;
};

// Value of bit j (1-based, MSB first) of basis index m in a q-qubit register.
inline int bit_of(long m, int j, int qubits) {
  return static_cast<int>((m >> (qubits - j)) & 1L);
}

// sigma_z eigenvalue of qubit j in basis state m; |0> is the +1 eigenstate.
inline int spin_sign(long m, int j, int qubits) {
  return bit_of(m, j, qubits) ? -1 : +1;
}

// Basis pair addressed by (qubit j, nu): nu's bits fill the non-j positions
// in order, a 0/1 is inserted at position j.
std::pair<long, long> transition_pair(int qubit, long nu, int qubits);

// Diagonal of the weak-coupling Hamiltonian in rad/s: E_m = <m|H|m> with
// H = -sum_i w_i sz_i/2 + sum_{i<j} 2 pi J_ij sz_i sz_j / 4.
std::vector<double> hamiltonian_energies(const SpinSystem& sys);

// All single-quantum transitions in canonical order (qubit ascending, nu
// ascending).  Line frequency is (E_upper - E_lower)/2pi with `upper` the
// bit-j-set state; with the Hamiltonian sign above a lone spin at +v Hz
// produces its line at +v Hz.
std::vector<TransitionIndex> transitions(const SpinSystem& sys,
                                         const RegisterLayout& layout);

// Groups of transitions (indices into the input list) closer than
// linewidth_hz to each other; singleton groups are omitted, so an empty
// result means the spectrum is fully resolved.
std::vector<std::vector<std::size_t>> check_resolution(
    const std::vector<TransitionIndex>& lines, double linewidth_hz);

}  // namespace aaqst
