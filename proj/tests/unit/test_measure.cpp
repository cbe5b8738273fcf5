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

TEST_CASE("embed with no ancilla is the identity") {
  const auto rho = random_state(4, 1);
  const auto out = embed(rho, RegisterLayout::make(2, 0));
  CHECK((out.entries - rho.entries).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("embedding sigma_z with one ancilla gives diag(1,1,-1,-1)/2") {
  const auto out = embed(DeviationDensityMatrix{pauli_z()}, RegisterLayout::make(1, 1));
  CMatrix expected = CMatrix::Zero(4, 4);
  expected.diagonal() << 0.5, 0.5, -0.5, -0.5;
  CHECK((out.entries - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("embed matches the dense indexing oracle and keeps invariants") {
  const auto layout = RegisterLayout::make(2, 2);
  const auto rho = random_state(4, 7);
  const auto out = embed(rho, layout);
  CHECK(out.dim() == 16);
  CHECK(out.hermiticity_defect() <= 1e-12);
  CHECK(out.trace_defect() <= 1e-12);
  for (long m = 0; m < 4; ++m)
    for (long mp = 0; mp < 4; ++mp)
      for (long a = 0; a < 4; ++a)
        for (long ap = 0; ap < 4; ++ap) {
          const cxd expected = a == ap ? rho.entries(m, mp) / 4.0 : cxd(0, 0);
          CHECK(std::abs(out.entries(m * 4 + a, mp * 4 + ap) - expected) == 0.0);
        }
  CHECK_THROWS_AS(embed(rho, RegisterLayout::make(3, 1)), ValidationError);
}

TEST_CASE("evolve conjugates, preserves norm, and rejects non-unitaries") {
  const auto rho = DeviationDensityMatrix{pauli_z()};
  const auto unchanged = evolve(rho, CMatrix::Identity(2, 2));
  CHECK((unchanged.entries - rho.entries).cwiseAbs().maxCoeff() == 0.0);

  const CMatrix pi_x = cxd(0, -1) * pauli_x();
  const auto flipped = evolve(rho, pi_x);
  CHECK((flipped.entries + pauli_z()).cwiseAbs().maxCoeff() <= 1e-15);

  Rng rng(21);
  const auto sys = random_system(3, rng);
  const auto layout = RegisterLayout::make(2, 1);
  const auto big = random_state(8, 3);
  const auto u = synthesize(template_two_delay(1e-3, 2e-3, 0.0, kPi / 2.0), sys, layout);
  const auto evolved = evolve(big, u);
  CHECK(evolved.entries.norm() == doctest::Approx(big.entries.norm()).epsilon(1e-12));

  CMatrix not_unitary = CMatrix::Identity(2, 2) * 1.5;
  CHECK_THROWS_AS(evolve(rho, not_unitary), ValidationError);
}

TEST_CASE("measure_lines reads single-quantum elements directly") {
  SUBCASE("diagonal states produce no signal") {
    const auto fixture = fixture_a();
    const auto rho = embed(thermal_a(), fixture.layout);
    for (const auto& p : measure_lines(rho, fixture.system, fixture.layout).entries)
      CHECK(std::abs(p.intensity) == 0.0);
  }

  SUBCASE("sigma_x gives intensity 1, sigma_y gives -i") {
    const auto sys = make_system({100.0}, {});
    const auto layout = RegisterLayout::make(1, 0);
    const auto px = measure_lines(DeviationDensityMatrix{pauli_x()}, sys, layout);
    REQUIRE(px.entries.size() == 1);
    CHECK(px.entries[0].intensity == cxd(1.0, 0.0));
    const auto py = measure_lines(DeviationDensityMatrix{pauli_y()}, sys, layout);
    CHECK(py.entries[0].intensity == cxd(0.0, -1.0));
  }

  SUBCASE("with U = 1, input lines carry rho elements / dim_ancilla and ancilla lines vanish") {
    const auto layout = RegisterLayout::make(2, 1);
    Rng rng(31);
    const auto sys = random_system(3, rng);
    const auto rho = random_state(4, 17);
    const auto peaks = measure_lines(embed(rho, layout), sys, layout);
    const auto lines = transitions(sys, layout);
    REQUIRE(peaks.entries.size() == lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const auto& t = lines[i];
      if (t.qubit <= 2) {
        // input-register flip: ancilla bit equal on both sides
        const long m = t.lower >> 1, mp = t.upper >> 1;
        CHECK(std::abs(peaks.entries[i].intensity - rho.entries(m, mp) / 2.0) == 0.0);
      } else {
        CHECK(std::abs(peaks.entries[i].intensity) == 0.0);
      }
    }
  }

  SUBCASE("pipeline intensities equal matrix entries of the evolved state") {
    const auto fixture = fixture_a();
    const auto rho = embed(random_state(4, 5), fixture.layout);
    const auto u = synthesize(sequence_a(), fixture.system, fixture.layout);
    const auto evolved = evolve(rho, u);
    const auto peaks = measure_lines(evolved, fixture.system, fixture.layout);
    const auto lines = transitions(fixture.system, fixture.layout);
    for (std::size_t i = 0; i < lines.size(); ++i)
      CHECK(peaks.entries[i].intensity ==
            evolved.entries(lines[i].lower, lines[i].upper));
  }
}

TEST_CASE("add_noise is deterministic and calibrated") {
  const auto fixture = fixture_a();
  const auto rho = embed(random_state(4, 99), fixture.layout);
  const auto u = synthesize(sequence_a(), fixture.system, fixture.layout);
  const auto clean = measure_lines(evolve(rho, u), fixture.system, fixture.layout);

  SUBCASE("zero noise is an identity") {
    const auto same = add_noise(clean, 0.0, 1);
    for (std::size_t i = 0; i < clean.entries.size(); ++i)
      CHECK(same.entries[i].intensity == clean.entries[i].intensity);
  }

  SUBCASE("same seed, same noise") {
    const auto a = add_noise(clean, 0.02, 7);
    const auto b = add_noise(clean, 0.02, 7);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      CHECK(a.entries[i].intensity == b.entries[i].intensity);
  }

  SUBCASE("empirical deviation matches sigma_rel * max intensity within 5%") {
    double peak_max = 0.0;
    for (const auto& p : clean.entries)
      peak_max = std::max(peak_max, std::abs(p.intensity));
    const double sigma_rel = 0.01;
    double sum_sq = 0.0;
    long count = 0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
      const auto noisy = add_noise(clean, sigma_rel, seed);
      // sample two entries per draw to keep this quick
      for (std::size_t i : {std::size_t{0}, std::size_t{5}}) {
        const cxd d = noisy.entries[i].intensity - clean.entries[i].intensity;
        sum_sq += d.real() * d.real() + d.imag() * d.imag();
        count += 2;
      }
    }
    const double measured = std::sqrt(sum_sq / static_cast<double>(count));
    CHECK(measured == doctest::Approx(sigma_rel * peak_max).epsilon(0.05));
  }
}
