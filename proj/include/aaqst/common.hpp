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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aaqst {

inline constexpr const char* kVersion = "0.1.0";

using cxd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Tolerances used across the library.  User-supplied matrices are accepted
// up to kInputTol (text formats round); internally constructed objects must
// hold invariants to kInternalTol.
inline constexpr double kInputTol = 1e-9;
inline constexpr double kInternalTol = 1e-12;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file or config (CLI exit code 2).
struct ParseError : Error {
  using Error::Error;
};

// Precondition or shape violation on an in-memory value (CLI exit code 2).
struct ValidationError : Error {
  using Error::Error;
};

// rank(M) < N^2-1: the state is not identifiable from the given
// experiments (CLI exit code 3).
struct IdentifiabilityError : Error {
  IdentifiabilityError(const std::string& msg, long nullspace_dim)
      : Error(msg), nullspace_dim(nullspace_dim) {}
  long nullspace_dim = 0;
};

// Delay optimization could not produce a full-rank constraint matrix
// (CLI exit code 4).
struct OptimizationError : Error {
  using Error::Error;
};

// Deterministic random source.  Wraps mt19937_64 but generates uniform and
// Gaussian variates with fixed algorithms (53-bit mantissa draw, Box-Muller)
// so streams do not depend on the standard library's distribution
// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; caches the second variate.
  double gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = kTwoPi * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  // Uniform integer in [0, n).
  std::uint64_t integer(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// FNV-1a, used to stamp input digests into output files.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex_digest(std::string_view bytes);

}  // namespace aaqst
