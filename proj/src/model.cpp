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

#include "aaqst/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace aaqst {

std::string hex_digest(std::string_view bytes) {
  std::ostringstream os;
  os << std::hex << fnv1a64(bytes);
  return "fnv1a:" + os.str();
}

RegisterLayout RegisterLayout::make(int n_input, int n_ancilla) {
  if (n_input < 1) throw ValidationError("register needs at least one input qubit");
  if (n_ancilla < 0) throw ValidationError("ancilla qubit count must be >= 0");
  if (n_input + n_ancilla > 20)
    throw ValidationError("register too large for dense simulation");
  return RegisterLayout{n_input, n_ancilla};
}

void SpinSystem::validate() const {
  const auto q = shift_hz.size();
  if (q == 0) throw ValidationError("spin system is empty");
  if (!labels.empty() && labels.size() != q)
    throw ValidationError("labels size does not match qubit count");
  if (!species.empty() && species.size() != q)
    throw ValidationError("species size does not match qubit count");
  if (coupling_hz.rows() != static_cast<long>(q) ||
      coupling_hz.cols() != static_cast<long>(q))
    throw ValidationError("coupling matrix shape does not match qubit count");
  for (long i = 0; i < coupling_hz.rows(); ++i) {
    if (coupling_hz(i, i) != 0.0)
      throw ValidationError("coupling matrix has a nonzero diagonal entry");
    for (long j = 0; j < i; ++j) {
      if (coupling_hz(i, j) != coupling_hz(j, i))
        throw ValidationError("coupling matrix is not symmetric");
    }
  }
  for (double v : shift_hz) {
    if (!std::isfinite(v)) throw ValidationError("non-finite chemical shift");
  }
  if (!coupling_hz.allFinite()) throw ValidationError("non-finite coupling");
}

std::pair<long, long> transition_pair(int qubit, long nu, int qubits) {
  const int tail = qubits - qubit;          // bits below position j
  const long high = nu >> tail;             // bits above position j
  const long low = nu & ((1L << tail) - 1);
  const long lower = (high << (tail + 1)) | low;
  return {lower, lower | (1L << tail)};
}

std::vector<double> hamiltonian_energies(const SpinSystem& sys) {
  sys.validate();
  const int q = sys.size();
  const long dim = sys.dim();
  std::vector<double> energies(dim, 0.0);
  for (long m = 0; m < dim; ++m) {
    double e = 0.0;
    for (int i = 1; i <= q; ++i) {
      const int si = spin_sign(m, i, q);
      e -= kTwoPi * sys.shift_hz[i - 1] * si / 2.0;
      for (int j = i + 1; j <= q; ++j) {
        e += kTwoPi * sys.coupling_hz(i - 1, j - 1) * si * spin_sign(m, j, q) / 4.0;
      }
    }
    energies[m] = e;
  }
  return energies;
}

std::vector<TransitionIndex> transitions(const SpinSystem& sys,
                                         const RegisterLayout& layout) {
  if (sys.size() != layout.total_qubits())
    throw ValidationError("spin system size does not match register layout");
  const int q = sys.size();
  const long half = sys.dim() / 2;
  const auto energies = hamiltonian_energies(sys);
  std::vector<TransitionIndex> out;
  out.reserve(static_cast<std::size_t>(q) * half);
  for (int j = 1; j <= q; ++j) {
    for (long nu = 0; nu < half; ++nu) {
      auto [lower, upper] = transition_pair(j, nu, q);
      TransitionIndex t;
      t.qubit = j;
      t.nu = nu;
      t.lower = lower;
      t.upper = upper;
      t.frequency_hz = (energies[upper] - energies[lower]) / kTwoPi;
      out.push_back(t);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> check_resolution(
    const std::vector<TransitionIndex>& lines, double linewidth_hz) {
  if (linewidth_hz <= 0.0) throw ValidationError("linewidth must be positive");
  // Union-find over transitions chained by near-coincident frequencies.
  std::vector<std::size_t> order(lines.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lines[a].frequency_hz < lines[b].frequency_hz;
  });
  std::vector<std::vector<std::size_t>> groups;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t jend = i + 1;
    while (jend < order.size() &&
           lines[order[jend]].frequency_hz - lines[order[jend - 1]].frequency_hz <=
               linewidth_hz) {
      ++jend;
    }
    if (jend - i > 1) {
      std::vector<std::size_t> group(order.begin() + i, order.begin() + jend);
      std::sort(group.begin(), group.end());
      groups.push_back(std::move(group));
    }
    i = jend;
  }
  return groups;
}

}  // namespace aaqst
