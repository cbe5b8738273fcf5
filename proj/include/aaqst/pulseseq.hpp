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

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "aaqst/model.hpp"

namespace aaqst {

// Which qubits a rotation addresses.  Species targeting models selective
// pulses on one nuclear species; selective pulses are ideal here (shaped
// pulse engineering is out of scope).
struct TargetSpec {
  enum class Mode { All, Input, Ancilla, Qubits, Species };
  Mode mode = Mode::All;
  std::vector<int> qubits;  // 1-based, Mode::Qubits only
  std::string species;      // Mode::Species only

  static TargetSpec all() { return {Mode::All, {}, {}}; }
  static TargetSpec input() { return {Mode::Input, {}, {}}; }
  static TargetSpec ancilla() { return {Mode::Ancilla, {}, {}}; }
  static TargetSpec of_qubits(std::vector<int> qs) {
    return {Mode::Qubits, std::move(qs), {}};
  }
  static TargetSpec of_species(std::string s) {
    return {Mode::Species, {}, std::move(s)};
  }

  // Resolves to a sorted list of 1-based qubit indices; throws on invalid
  // or empty targets.
  std::vector<int> resolve(const SpinSystem& sys, const RegisterLayout& layout) const;

  std::string describe() const;
};

// Ideal hard pulse: exp(-i angle (cos(phase) Sx + sin(phase) Sy) / 2)
// summed over the target qubits.  phase 0 is x, pi/2 is y.
struct Rotation {
  double angle_rad = 0.0;
  double phase_rad = 0.0;
  TargetSpec targets = TargetSpec::all();
};

// Free evolution under the internal Hamiltonian for tau seconds.
struct Delay {
  double tau_s = 0.0;
};

// Ancilla-controlled block unitary: V * sum_a U_a (x) |a><a| with one
// input-register unitary per ancilla basis state and a local ancilla
// unitary V applied after the controlled part.
struct Controlled {
  std::vector<CMatrix> input_unitaries;  // dim_ancilla entries, each N x N
  CMatrix ancilla_unitary;               // dim_ancilla x dim_ancilla
};

using PulseElement = std::variant<Rotation, Delay, Controlled>;

// Elements are listed in time order; the synthesized matrix is the
// reverse-order product.  Empty sequence = identity.
struct PulseSequence {
  std::vector<PulseElement> elements;
};

// Dense combined-register unitary of a sequence.  Delays use the diagonal
// Hamiltonian directly (no matrix exponential); the result is unitary to
// 1e-10 by construction.
CMatrix synthesize(const PulseSequence& seq, const SpinSystem& sys,
                   const RegisterLayout& layout);

// [Delay(tau1), Rotation(pi/2, phase1), Delay(tau2), Rotation(pi/2, phase2)]
// -- the two-delay tomography template; phases (x, y) and (x, x) are the
// published instances.
PulseSequence template_two_delay(double tau1_s, double tau2_s, double phase1_rad,
                                 double phase2_rad,
                                 TargetSpec targets = TargetSpec::all());

// Named state-preparation fixtures:
//   "tilt-pi4"       -- (pi/4) pulse of phase pi/4 on the input register
//   "echo-scramble"  -- (pi/2)y on qubit 1, 2.5 ms, (pi)x on species H,
//                       2.5 ms, (pi/2)x on species F
const std::map<std::string, PulseSequence>& state_prep_sequences();

}  // namespace aaqst
