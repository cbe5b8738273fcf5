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

#include <doctest.h>

#include "helpers.hpp"

using namespace aaqst;
using namespace aaqst::testing;

TEST_CASE("pack maps the Pauli basis to the expected unknown vectors") {
  const auto vz = pack(DeviationDensityMatrix{pauli_z()});
  REQUIRE(vz.size() == 3);
  CHECK(vz.values(0) == doctest::Approx(1.0));
  CHECK(vz.values(1) == doctest::Approx(0.0));
  CHECK(vz.values(2) == doctest::Approx(0.0));

  const auto vy = pack(DeviationDensityMatrix{pauli_y()});
  CHECK(vy.values(0) == doctest::Approx(0.0));
  CHECK(vy.values(1) == doctest::Approx(0.0));
  CHECK(vy.values(2) == doctest::Approx(-1.0));
}

TEST_CASE("unpack inverts pack and fills the last diagonal by tracelessness") {
  UnknownVector v{(RVector(3) << 1.0, 0.0, 0.0).finished()};
  const auto rho = unpack(v);
  CHECK((rho.entries - pauli_z()).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

  UnknownVector zero{RVector::Zero(15)};
  CHECK(unpack(zero).entries.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("unit vectors unpack to the parametrization basis elements") {
  const long dim = 4;
  for (long k = 0; k < unknown_count(dim); ++k) {
    RVector v = RVector::Zero(unknown_count(dim));
    v(k) = 1.0;
    const auto rho = unpack(UnknownVector{v});
    const auto id = unknown_for_column(dim, k);
    CMatrix expected = CMatrix::Zero(dim, dim);
    switch (id.kind) {
      case UnknownId::Kind::Diag:
        expected(id.m, id.m) = 1.0;
        expected(dim - 1, dim - 1) = -1.0;
        break;
      case UnknownId::Kind::Real:
        expected(id.m, id.mp) = 1.0;
        expected(id.mp, id.m) = 1.0;
        break;
      case UnknownId::Kind::Imag:
        expected(id.m, id.mp) = cxd(0, 1);
        expected(id.mp, id.m) = cxd(0, -1);
        break;
    }
    CHECK((rho.entries - expected).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    CHECK(column_for_unknown(dim, id) == k);
  }
}

TEST_CASE("pack/unpack round trips to 1e-14") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (long dim : {2L, 4L, 8L}) {
      const auto rho = random_state(dim, seed);
      const auto back = unpack(pack(rho));
      CHECK((back.entries - rho.entries).cwiseAbs().maxCoeff() <= 1e-14);
    }
  }
  Rng rng(7);
  RVector v(15);
  for (long i = 0; i < v.size(); ++i) v(i) = rng.uniform(-1.0, 1.0);
  const auto back = pack(unpack(UnknownVector{v}));
  CHECK((back.values - v).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("pack rejects non-Hermitian and non-traceless matrices") {
  CMatrix bad(2, 2);
  bad << 1.0, cxd(0, 1), cxd(0, 1), -1.0;  // not Hermitian
  CHECK_THROWS_AS(pack(DeviationDensityMatrix{bad}), ValidationError);
  CMatrix traced = CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(pack(DeviationDensityMatrix{traced}), ValidationError);
  CHECK_THROWS_AS(DeviationDensityMatrix::from_matrix(traced), ValidationError);
}

TEST_CASE("unpack rejects lengths that are not N^2-1") {
  CHECK_THROWS_AS(unpack(UnknownVector{RVector::Zero(14)}), ValidationError);
}

TEST_CASE("fidelity basics") {
  const DeviationDensityMatrix z{pauli_z()};
  const DeviationDensityMatrix x{pauli_x()};
  const DeviationDensityMatrix minus_z{(-pauli_z()).eval()};
  CHECK(fidelity(z, z) == doctest::Approx(1.0));
  CHECK(fidelity(z, x) == doctest::Approx(0.0));
  CHECK(fidelity(z, minus_z) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(fidelity(z, DeviationDensityMatrix{CMatrix::Zero(2, 2)}),
                  ValidationError);
}

TEST_CASE("fidelity is symmetric and scale invariant") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto a = random_state(4, seed);
    const auto b = random_state(4, seed + 100);
    CHECK(fidelity(a, b) == doctest::Approx(fidelity(b, a)).epsilon(1e-12));
    const DeviationDensityMatrix scaled{(3.7 * b.entries).eval()};
    CHECK(fidelity(a, scaled) == doctest::Approx(fidelity(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("from_pauli_terms matches the dense Kronecker oracle") {
  SUBCASE("half sigma_z on one qubit") {
    const auto rho = from_pauli_terms({{0.5, "Z"}});
    CHECK(rho.entries(0, 0).real() == doctest::Approx(0.5));
    CHECK(rho.entries(1, 1).real() == doctest::Approx(-0.5));
  }

  SUBCASE("two-qubit thermal state is diag(1, 0, 0, -1)") {
    const auto rho = thermal_a();
    CMatrix expected = 0.5 * (kron(pauli_z(), pauli_i()) + kron(pauli_i(), pauli_z()));
    CHECK((rho.entries - expected).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(rho.entries(0, 0).real() == doctest::Approx(1.0));
    CHECK(rho.entries(3, 3).real() == doctest::Approx(-1.0));
  }

  SUBCASE("tilted two-qubit state against the oracle") {
    const double c = 1.0 / std::sqrt(2.0);
    const auto rho = from_pauli_terms({{0.5, "XI"},
                                       {0.5, "IX"},
                                       {-0.5, "YI"},
                                       {-0.5, "IY"},
                                       {c, "ZI"},
                                       {c, "IZ"}});
    CMatrix expected =
        0.5 * (kron(pauli_x(), pauli_i()) + kron(pauli_i(), pauli_x())) -
        0.5 * (kron(pauli_y(), pauli_i()) + kron(pauli_i(), pauli_y())) +
        c * (kron(pauli_z(), pauli_i()) + kron(pauli_i(), pauli_z()));
    CHECK((rho.entries - expected).cwiseAbs().maxCoeff() <= 1e-15);
  }

  SUBCASE("output is always traceless and Hermitian") {
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<PauliTerm> terms;
      for (int t = 0; t < 4; ++t) {
        std::string ops(3, 'I');
        for (auto& ch : ops) ch = "IXYZ"[rng.integer(4)];
        if (ops == "III") ops[0] = 'X';
        terms.push_back({rng.uniform(-2.0, 2.0), ops});
      }
      const auto rho = from_pauli_terms(terms);
      CHECK(rho.hermiticity_defect() <= 1e-12);
      CHECK(rho.trace_defect() <= 1e-12);
    }
  }

  SUBCASE("rejects identity-only terms and unknown letters") {
    CHECK_THROWS_AS(from_pauli_terms({{1.0, "II"}}), ValidationError);
    CHECK_THROWS_AS(from_pauli_terms({{1.0, "XQ"}}), ValidationError);
    CHECK_THROWS_AS(from_pauli_terms({{1.0, "XX"}, {1.0, "X"}}), ValidationError);
  }
}

TEST_CASE("random_state is deterministic, normalized, and seed sensitive") {
  const auto a = random_state(8, 42);
  const auto b = random_state(8, 42);
  CHECK((a.entries - b.entries).cwiseAbs().maxCoeff() == 0.0);
  CHECK(a.hermiticity_defect() <= 1e-12);
  CHECK(a.trace_defect() <= 1e-12);
  CHECK(a.entries.norm() == doctest::Approx(1.0).epsilon(1e-12));
  const auto c = random_state(8, 43);
  CHECK(fidelity(a, c) < 1.0);
}
