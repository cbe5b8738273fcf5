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

namespace {

std::vector<TransitionIndex> two_lines(double f1, double f2) {
  TransitionIndex a;
  a.qubit = 1;
  a.nu = 0;
  a.frequency_hz = f1;
  TransitionIndex b;
  b.qubit = 1;
  b.nu = 1;
  b.frequency_hz = f2;
  return {a, b};
}

}  // namespace

TEST_CASE("a single synthesized Lorentzian fits back to its amplitude") {
  const double lw = 2.0;
  PeakList peaks;
  peaks.entries.push_back(Peak{1, 0, 50.0, cxd(0.7, -0.2)});
  const auto trace = synthesize_trace(peaks, lw, TraceGrid{-150.0, 250.0, 4001});
  auto lines = two_lines(50.0, 0.0);
  lines.resize(1);
  const auto fitted = fit_amplitudes(trace, lines, lw);
  CHECK(std::abs(fitted.entries[0].intensity - cxd(0.7, -0.2)) <= 1e-6);
}

TEST_CASE("an all-zero trace fits to an all-zero peak list") {
  SpectrumTrace trace;
  trace.linewidth_hz = 1.0;
  for (int i = 0; i <= 200; ++i) trace.samples.push_back({-100.0 + i, cxd(0, 0)});
  const auto fitted = fit_amplitudes(trace, two_lines(-20.0, 30.0), 1.0);
  for (const auto& p : fitted.entries) CHECK(std::abs(p.intensity) == 0.0);
}

TEST_CASE("well-separated lines recover (1, i) amplitudes") {
  const double lw = 1.0;
  PeakList peaks;
  peaks.entries.push_back(Peak{1, 0, -50.0, cxd(1.0, 0.0)});
  peaks.entries.push_back(Peak{1, 1, 50.0, cxd(0.0, 1.0)});  // 100x linewidth apart
  const auto trace = synthesize_trace(peaks, lw, TraceGrid{-250.0, 250.0, 20001});
  const auto fitted = fit_amplitudes(trace, two_lines(-50.0, 50.0), lw);
  CHECK(std::abs(fitted.entries[0].intensity - cxd(1.0, 0.0)) <= 1e-6);
  CHECK(std::abs(fitted.entries[1].intensity - cxd(0.0, 1.0)) <= 1e-6);
}

TEST_CASE("fit(synthesize(P)) is the identity on random peak lists") {
  Rng rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const auto sys = random_system(2, rng);
    const auto layout = RegisterLayout::make(2, 0);
    const auto lines = transitions(sys, layout);
    PeakList peaks;
    for (const auto& t : lines)
      peaks.entries.push_back(
          Peak{t.qubit, t.nu, t.frequency_hz, cxd(rng.uniform(-1, 1), rng.uniform(-1, 1))});
    const double lw = 1.5;
    double f_lo = 1e300, f_hi = -1e300;
    for (const auto& t : lines) {
      f_lo = std::min(f_lo, t.frequency_hz);
      f_hi = std::max(f_hi, t.frequency_hz);
    }
    const auto trace = synthesize_trace(peaks, lw,
                                        TraceGrid{f_lo - 300.0, f_hi + 300.0, 60001});
    const auto fitted = fit_amplitudes(trace, lines, lw);
    for (std::size_t i = 0; i < peaks.entries.size(); ++i)
      CHECK(std::abs(fitted.entries[i].intensity - peaks.entries[i].intensity) <= 1e-6);
  }
}

TEST_CASE("fitting is linear in the trace") {
  const double lw = 2.0;
  PeakList peaks;
  peaks.entries.push_back(Peak{1, 0, 0.0, cxd(0.4, 0.1)});
  auto trace = synthesize_trace(peaks, lw, TraceGrid{-200.0, 200.0, 2001});
  auto doubled = trace;
  for (auto& s : doubled.samples) s.value *= 2.0;
  auto lines = two_lines(0.0, 0.0);
  lines.resize(1);
  const auto a = fit_amplitudes(trace, lines, lw);
  const auto b = fit_amplitudes(doubled, lines, lw);
  CHECK(std::abs(b.entries[0].intensity - 2.0 * a.entries[0].intensity) <= 1e-9);
}

TEST_CASE("reference scale multiplies fitted amplitudes") {
  const double lw = 2.0;
  PeakList peaks;
  peaks.entries.push_back(Peak{1, 0, 0.0, cxd(1.0, 0.0)});
  auto trace = synthesize_trace(peaks, lw, TraceGrid{-200.0, 200.0, 2001});
  trace.reference_scale = 2.5;
  auto lines = two_lines(0.0, 0.0);
  lines.resize(1);
  const auto fitted = fit_amplitudes(trace, lines, lw);
  CHECK(std::abs(fitted.entries[0].intensity - cxd(2.5, 0.0)) <= 1e-6);
}

TEST_CASE("transitions outside the trace span are rejected with their index") {
  SpectrumTrace trace;
  trace.linewidth_hz = 1.0;
  for (int i = 0; i <= 100; ++i) trace.samples.push_back({-50.0 + i, cxd(0, 0)});
  try {
    fit_amplitudes(trace, two_lines(0.0, 500.0), 1.0);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("nu=1") != std::string::npos);
    CHECK(std::string(e.what()).find("span") != std::string::npos);
  }
}

TEST_CASE("colliding transitions are named when the basis degenerates") {
  SpectrumTrace trace;
  trace.linewidth_hz = 1.0;
  for (int i = 0; i <= 400; ++i) trace.samples.push_back({-200.0 + i, cxd(0, 0)});
  try {
    fit_amplitudes(trace, two_lines(10.0, 10.0 + 1e-7), 1.0);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("condition number") != std::string::npos);
    CHECK(msg.find("(j=1, nu=0)") != std::string::npos);
    CHECK(msg.find("(j=1, nu=1)") != std::string::npos);
  }
}

TEST_CASE("synthesize_trace basics") {
  SUBCASE("empty peak list gives a zero trace") {
    const auto trace = synthesize_trace(PeakList{}, 1.0, TraceGrid{-10.0, 10.0, 101});
    for (const auto& s : trace.samples) CHECK(std::abs(s.value) == 0.0);
  }

  SUBCASE("a unit peak is tallest at its own frequency") {
    PeakList peaks;
    peaks.entries.push_back(Peak{1, 0, 3.0, cxd(1.0, 0.0)});
    const auto trace = synthesize_trace(peaks, 1.0, TraceGrid{-50.0, 50.0, 1001});
    double best = 0.0;
    double best_f = 0.0;
    for (const auto& s : trace.samples)
      if (std::abs(s.value) > best) {
        best = std::abs(s.value);
        best_f = s.frequency_hz;
      }
    CHECK(best_f == doctest::Approx(3.0).epsilon(1e-12));
  }

  SUBCASE("a grid that misses a peak is rejected") {
    PeakList peaks;
    peaks.entries.push_back(Peak{1, 0, 100.0, cxd(1.0, 0.0)});
    CHECK_THROWS_AS(synthesize_trace(peaks, 1.0, TraceGrid{-50.0, 50.0, 101}),
                    ValidationError);
  }
}
