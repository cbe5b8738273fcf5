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

#include "aaqst/densmat.hpp"

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

namespace aaqst {

double DeviationDensityMatrix::hermiticity_defect() const {
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

double DeviationDensityMatrix::trace_defect() const {
  return std::abs(entries.trace());
}

DeviationDensityMatrix DeviationDensityMatrix::from_matrix(CMatrix m, double tol) {
  if (m.rows() != m.cols()) throw ValidationError("density matrix must be square");
  if (m.rows() < 2) throw ValidationError("density matrix dimension must be >= 2");
  DeviationDensityMatrix rho{std::move(m)};
  if (rho.hermiticity_defect() > tol)
    throw ValidationError("matrix is not Hermitian within tolerance");
  if (rho.trace_defect() > tol)
    throw ValidationError("matrix is not traceless within tolerance");
  return rho;
}

std::string UnknownId::name() const {
  switch (kind) {
    case Kind::Diag:
      return "rho_" + std::to_string(m);
    case Kind::Real:
      return "R_" + std::to_string(m) + "_" + std::to_string(mp);
    case Kind::Imag:
      return "S_" + std::to_string(m) + "_" + std::to_string(mp);
  }
  return {};
}

long unknown_count(long dim) { return dim * dim - 1; }

long dim_for_unknown_count(long count) {
  const long dim = std::lround(std::sqrt(static_cast<double>(count + 1)));
  if (dim < 2 || dim * dim - 1 != count)
    throw ValidationError("vector length is not of the form N^2-1");
  return dim;
}

UnknownId unknown_for_column(long dim, long column) {
  if (column < 0 || column >= unknown_count(dim))
    throw ValidationError("unknown column index out of range");
  if (column < dim - 1) return {UnknownId::Kind::Diag, column, 0};
  long off = column - (dim - 1);
  const long pairs = dim * (dim - 1) / 2;
  const UnknownId::Kind kind =
      off < pairs ? UnknownId::Kind::Real : UnknownId::Kind::Imag;
  if (off >= pairs) off -= pairs;
  // lexicographic (m, m') with m < m'
  long m = 0;
  long row_len = dim - 1;
  while (off >= row_len) {
    off -= row_len;
    ++m;
    --row_len;
  }
  return {kind, m, m + 1 + off};
}

long column_for_unknown(long dim, const UnknownId& id) {
  if (id.kind == UnknownId::Kind::Diag) {
    if (id.m < 0 || id.m >= dim - 1) throw ValidationError("diagonal unknown out of range");
    return id.m;
  }
  if (id.m < 0 || id.m >= id.mp || id.mp >= dim)
    throw ValidationError("off-diagonal unknown out of range");
  // offset of pair (m, m') in lexicographic order
  const long before = id.m * dim - id.m * (id.m + 1) / 2;
  const long off = before + (id.mp - id.m - 1);
  const long pairs = dim * (dim - 1) / 2;
  return dim - 1 + (id.kind == UnknownId::Kind::Imag ? pairs : 0) + off;
}

UnknownVector pack(const DeviationDensityMatrix& rho) {
  if (rho.hermiticity_defect() > kInputTol)
    throw ValidationError("pack: matrix is not Hermitian within tolerance");
  if (rho.trace_defect() > kInputTol)
    throw ValidationError("pack: matrix is not traceless within tolerance");
  const long dim = rho.dim();
  RVector v(unknown_count(dim));
  for (long m = 0; m < dim - 1; ++m) v[m] = rho.entries(m, m).real();
  long col = dim - 1;
  for (long m = 0; m < dim - 1; ++m)
    for (long mp = m + 1; mp < dim; ++mp) v[col++] = rho.entries(m, mp).real();
  for (long m = 0; m < dim - 1; ++m)
    for (long mp = m + 1; mp < dim; ++mp) v[col++] = rho.entries(m, mp).imag();
  return UnknownVector{std::move(v)};
}

DeviationDensityMatrix unpack(const UnknownVector& v) {
  const long dim = dim_for_unknown_count(v.size());
  CMatrix m = CMatrix::Zero(dim, dim);
  double diag_sum = 0.0;
  for (long i = 0; i < dim - 1; ++i) {
    m(i, i) = v.values[i];
    diag_sum += v.values[i];
  }
  m(dim - 1, dim - 1) = -diag_sum;  // trace-zero constraint
  long col = dim - 1;
  for (long i = 0; i < dim - 1; ++i) {
    for (long j = i + 1; j < dim; ++j) {
      m(i, j) += v.values[col];
      m(j, i) += v.values[col];
      ++col;
    }
  }
  for (long i = 0; i < dim - 1; ++i) {
    for (long j = i + 1; j < dim; ++j) {
      m(i, j) += cxd(0.0, v.values[col]);
      m(j, i) -= cxd(0.0, v.values[col]);
      ++col;
    }
  }
  return DeviationDensityMatrix{std::move(m)};
}

double fidelity(const DeviationDensityMatrix& a, const DeviationDensityMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("fidelity: dimension mismatch");
  const double na = a.entries.squaredNorm();
  const double nb = b.entries.squaredNorm();
  if (na == 0.0 || nb == 0.0) throw ValidationError("fidelity: zero-norm state");
  const double overlap = (a.entries.adjoint() * b.entries).trace().real();
  return overlap / std::sqrt(na * nb);
}

namespace {

CMatrix pauli(char op) {
  CMatrix p(2, 2);
  switch (op) {
    case 'I':
      p << 1, 0, 0, 1;
      break;
    case 'X':
      p << 0, 1, 1, 0;
      break;
    case 'Y':
      p << 0, cxd(0, -1), cxd(0, 1), 0;
      break;
    case 'Z':
      p << 1, 0, 0, -1;
      break;
    default:
      throw ValidationError(std::string("unknown Pauli letter '") + op + "'");
  }
  return p;
}

}  // namespace

DeviationDensityMatrix from_pauli_terms(const std::vector<PauliTerm>& terms) {
  if (terms.empty()) throw ValidationError("no Pauli terms given");
  const std::size_t q = terms.front().ops.size();
  if (q == 0) throw ValidationError("empty Pauli operator string");
  const long dim = 1L << q;
  CMatrix sum = CMatrix::Zero(dim, dim);
  for (const auto& term : terms) {
    if (term.ops.size() != q)
      throw ValidationError("Pauli terms have inconsistent qubit counts");
    if (term.ops.find_first_not_of('I') == std::string::npos)
      throw ValidationError("identity-only Pauli term breaks tracelessness");
    CMatrix acc = pauli(term.ops[0]);
    for (std::size_t i = 1; i < q; ++i)
      acc = Eigen::kroneckerProduct(acc, pauli(term.ops[i])).eval();
    sum += term.coeff * acc;
  }
  return DeviationDensityMatrix{std::move(sum)};
}

DeviationDensityMatrix random_state(long dim, std::uint64_t seed) {
  if (dim < 2) throw ValidationError("random state dimension must be >= 2");
  Rng rng(seed);
  CMatrix a(dim, dim);
  for (long i = 0; i < dim; ++i)
    for (long j = 0; j < dim; ++j) a(i, j) = cxd(rng.gaussian(), rng.gaussian());
  CMatrix h = (a + a.adjoint()) / 2.0;
  h -= (h.trace() / static_cast<double>(dim)) * CMatrix::Identity(dim, dim);
  h /= h.norm();
  return DeviationDensityMatrix{std::move(h)};
}

}  // namespace aaqst
