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

#include "aaqst/pulseseq.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unsupported/Eigen/KroneckerProduct>

namespace aaqst {

std::vector<int> TargetSpec::resolve(const SpinSystem& sys,
                                     const RegisterLayout& layout) const {
  const int q = sys.size();
  std::vector<int> out;
  switch (mode) {
    case Mode::All:
      for (int i = 1; i <= q; ++i) out.push_back(i);
      break;
    case Mode::Input:
      for (int i = 1; i <= layout.input_qubits(); ++i) out.push_back(i);
      break;
    case Mode::Ancilla:
      for (int i = layout.input_qubits() + 1; i <= q; ++i) out.push_back(i);
      break;
    case Mode::Qubits: {
      std::set<int> seen;
      for (int i : qubits) {
        if (i < 1 || i > q)
          throw ValidationError("rotation target qubit " + std::to_string(i) +
                                " out of range 1.." + std::to_string(q));
        if (seen.insert(i).second) out.push_back(i);
      }
      std::sort(out.begin(), out.end());
      break;
    }
    case Mode::Species: {
      if (sys.species.size() != static_cast<std::size_t>(q))
        throw ValidationError("spin system carries no species tags");
      for (int i = 1; i <= q; ++i)
        if (sys.species[i - 1] == species) out.push_back(i);
      break;
    }
  }
  if (out.empty()) throw ValidationError("rotation target set is empty");
  return out;
}

std::string TargetSpec::describe() const {
  switch (mode) {
    case Mode::All:
      return "all";
    case Mode::Input:
      return "input";
    case Mode::Ancilla:
      return "ancilla";
    case Mode::Species:
      return "species:" + species;
    case Mode::Qubits: {
      std::ostringstream os;
      os << "qubits:";
      for (std::size_t i = 0; i < qubits.size(); ++i)
        os << (i ? "," : "") << qubits[i];
      return os.str();
    }
  }
  return {};
}

namespace {

CMatrix rotation_matrix(const Rotation& rot, const SpinSystem& sys,
                        const RegisterLayout& layout) {
  if (!std::isfinite(rot.angle_rad) || !std::isfinite(rot.phase_rad))
    throw ValidationError("rotation angle/phase must be finite");
  const auto targets = rot.targets.resolve(sys, layout);
  const double c = std::cos(rot.angle_rad / 2.0);
  const double s = std::sin(rot.angle_rad / 2.0);
  // exp(-i t/2 (cos(phi) sx + sin(phi) sy)) on one qubit
  CMatrix r1(2, 2);
  r1 << cxd(c, 0.0), cxd(0.0, -s) * std::exp(cxd(0.0, -rot.phase_rad)),
      cxd(0.0, -s) * std::exp(cxd(0.0, rot.phase_rad)), cxd(c, 0.0);

  const int q = sys.size();
  std::vector<bool> hit(static_cast<std::size_t>(q) + 1, false);
  for (int t : targets) hit[static_cast<std::size_t>(t)] = true;
  // Single-qubit terms on distinct qubits commute, so the exponential of the
  // summed generator factorizes into a Kronecker product.
  CMatrix u = CMatrix::Ones(1, 1);
  const CMatrix eye2 = CMatrix::Identity(2, 2);
  for (int j = 1; j <= q; ++j)
    u = Eigen::kroneckerProduct(u, hit[static_cast<std::size_t>(j)] ? r1 : eye2).eval();
  return u;
}

CMatrix delay_matrix(const Delay& delay, const std::vector<double>& energies) {
  if (!(delay.tau_s >= 0.0) || !std::isfinite(delay.tau_s))
    throw ValidationError("delay must be finite and >= 0");
  const long dim = static_cast<long>(energies.size());
  CMatrix u = CMatrix::Zero(dim, dim);
  for (long m = 0; m < dim; ++m)
    u(m, m) = std::exp(cxd(0.0, -energies[m] * delay.tau_s));
  return u;
}

CMatrix controlled_matrix(const Controlled& ctrl, const RegisterLayout& layout) {
  const long nin = layout.dim_input();
  const long nanc = layout.dim_ancilla();
  if (static_cast<long>(ctrl.input_unitaries.size()) != nanc)
    throw ValidationError("controlled element needs exactly one input unitary per ancilla state");
  if (ctrl.ancilla_unitary.rows() != nanc || ctrl.ancilla_unitary.cols() != nanc)
    throw ValidationError("ancilla unitary has wrong dimension");
  for (const auto& u : ctrl.input_unitaries) {
    if (u.rows() != nin || u.cols() != nin)
      throw ValidationError("controlled input unitary has wrong dimension");
  }
  const long dim = layout.dim_total();
  CMatrix u = CMatrix::Zero(dim, dim);
  // sum_a U_a (x) |a><a|, input register on the most significant bits
  for (long a = 0; a < nanc; ++a) {
    for (long m = 0; m < nin; ++m)
      for (long mp = 0; mp < nin; ++mp)
        u(m * nanc + a, mp * nanc + a) = ctrl.input_unitaries[a](m, mp);
  }
  // ancilla-local V applied after the controlled part
  CMatrix v = CMatrix::Zero(dim, dim);
  for (long m = 0; m < nin; ++m)
    for (long a = 0; a < nanc; ++a)
      for (long ap = 0; ap < nanc; ++ap)
        v(m * nanc + a, m * nanc + ap) = ctrl.ancilla_unitary(a, ap);
  return v * u;
}

}  // namespace

CMatrix synthesize(const PulseSequence& seq, const SpinSystem& sys,
                   const RegisterLayout& layout) {
  if (sys.size() != layout.total_qubits())
    throw ValidationError("spin system size does not match register layout");
  const long dim = sys.dim();
  std::vector<double> energies;
  CMatrix u = CMatrix::Identity(dim, dim);
  for (const auto& element : seq.elements) {
    CMatrix step;
    if (const auto* rot = std::get_if<Rotation>(&element)) {
      step = rotation_matrix(*rot, sys, layout);
    } else if (const auto* delay = std::get_if<Delay>(&element)) {
      if (energies.empty()) energies = hamiltonian_energies(sys);
      step = delay_matrix(*delay, energies);
    } else {
      step = controlled_matrix(std::get<Controlled>(element), layout);
    }
    u = step * u;  // later elements act on the left
  }
  return u;
}

PulseSequence template_two_delay(double tau1_s, double tau2_s, double phase1_rad,
                                 double phase2_rad, TargetSpec targets) {
  if (tau1_s < 0.0 || tau2_s < 0.0) throw ValidationError("delays must be >= 0");
  PulseSequence seq;
  seq.elements.push_back(Delay{tau1_s});
  seq.elements.push_back(Rotation{kPi / 2.0, phase1_rad, targets});
  seq.elements.push_back(Delay{tau2_s});
  seq.elements.push_back(Rotation{kPi / 2.0, phase2_rad, targets});
  return seq;
}

const std::map<std::string, PulseSequence>& state_prep_sequences() {
  static const std::map<std::string, PulseSequence> fixtures = [] {
    std::map<std::string, PulseSequence> m;
    PulseSequence tilt;
    tilt.elements.push_back(Rotation{kPi / 4.0, kPi / 4.0, TargetSpec::input()});
    m.emplace("tilt-pi4", std::move(tilt));

    const double tau0 = 2.5e-3;
    PulseSequence scramble;
    scramble.elements.push_back(Rotation{kPi / 2.0, kPi / 2.0, TargetSpec::of_qubits({1})});
    scramble.elements.push_back(Delay{tau0});
    scramble.elements.push_back(Rotation{kPi, 0.0, TargetSpec::of_species("H")});
    scramble.elements.push_back(Delay{tau0});
    scramble.elements.push_back(Rotation{kPi / 2.0, 0.0, TargetSpec::of_species("F")});
    m.emplace("echo-scramble", std::move(scramble));
    return m;
  }();
  return fixtures;
}

}  // namespace aaqst
