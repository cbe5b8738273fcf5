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
#include <string>
#include <vector>

#include "aaqst/common.hpp"

namespace aaqst {

// Traceless Hermitian deviation density matrix.  The maximally mixed
// background and the purity factor are outside the model: they produce no
// signal and never enter the tomography equations.
struct DeviationDensityMatrix {
  CMatrix entries;  // N x N

  long dim() const { return entries.rows(); }

  // Validating constructor for user-supplied matrices.
  static DeviationDensityMatrix from_matrix(CMatrix m, double tol = kInputTol);

  // Max deviation from Hermiticity / zero trace.
  double hermiticity_defect() const;
  double trace_defect() const;
};

// Identifies one of the N^2-1 real unknowns of a deviation matrix.
struct UnknownId {
  enum class Kind { Diag, Real, Imag };
  Kind kind = Kind::Diag;
  long m = 0;
  long mp = 0;  // unused for Diag

  std::string name() const;
};

// Canonical flattening: N-1 diagonals rho_mm (m = 0..N-2), then R_mm' for
// m < m' in lexicographic (m, m') order, then S_mm' in the same order.
struct UnknownVector {
  RVector values;  // length N^2-1

  long size() const { return values.size(); }
};

long unknown_count(long dim);
// Recovers N from a vector length N^2-1; throws if no such N exists.
long dim_for_unknown_count(long count);
UnknownId unknown_for_column(long dim, long column);
long column_for_unknown(long dim, const UnknownId& id);

UnknownVector pack(const DeviationDensityMatrix& rho);
DeviationDensityMatrix unpack(const UnknownVector& v);

// Normalized Hilbert-Schmidt overlap Tr(a b) / sqrt(Tr(a a) Tr(b b)).
// Symmetric, scale-invariant, in [-1, 1]; throws on zero-norm input.
double fidelity(const DeviationDensityMatrix& a, const DeviationDensityMatrix& b);

struct PauliTerm {
  double coeff = 0.0;
  std::string ops;  // one of I, X, Y, Z per qubit, qubit 1 first
};

// Sum of scaled Kronecker products of single-qubit Pauli matrices.
// Identity-only terms are rejected (they would break tracelessness).
DeviationDensityMatrix from_pauli_terms(const std::vector<PauliTerm>& terms);

// Deterministic traceless Hermitian matrix with unit Frobenius norm.
DeviationDensityMatrix random_state(long dim, std::uint64_t seed);

}  // namespace aaqst
