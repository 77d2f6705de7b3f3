// Copyright 2026 The fracdirac Authors
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

#include "fracdirac/spectral.hpp"

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "fracdirac/grid.hpp"
#include "fracdirac/matrix_utils.hpp"

using namespace fracdirac;

namespace {

constexpr double kLength = 2.0 * kPi;

GridFunction random_band_limited(std::size_t n, std::uint64_t seed,
                                 int max_mode, bool nonnegative_modes) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<std::pair<int, Complex>> modes;
  for (int t = 0; t < 5; ++t) {
    int mode = static_cast<int>(rng() % static_cast<std::uint64_t>(max_mode + 1));
    if (!nonnegative_modes && (rng() % 2)) mode = -mode;
    modes.emplace_back(mode, Complex(dist(rng), dist(rng)));
  }
  return sample_function(n, kLength, [&](double x) {
    Complex acc(0.0, 0.0);
    for (const auto& [m, c] : modes) acc += c * unit_phase(m * x);
    return acc;
  });
}

}  // namespace

TEST_CASE("order 1 recovers the classical derivative of sine") {
  const auto f = sample_function(256, kLength,
                                 [](double x) { return Complex(std::sin(x), 0.0); });
  const GridFunction d = frac_derivative(f, 1.0);
  const auto expected = sample_function(
      256, kLength, [](double x) { return Complex(std::cos(x), 0.0); });
  REQUIRE(max_abs(ComplexVector(d.samples - expected.samples)) < 1e-12);
}

TEST_CASE("order 0 is the identity") {
  const auto f = random_band_limited(128, 5, 10, false);
  const GridFunction d = frac_derivative(f, 0.0);
  REQUIRE(max_abs(ComplexVector(d.samples - f.samples)) < 1e-12);
}

TEST_CASE("order 2 multiplies a plane wave by -(2 pi / L)^2") {
  const std::size_t n = 64;
  const double w = 2.0 * kPi / kLength;
  const auto f =
      sample_function(n, kLength, [&](double x) { return unit_phase(w * x); });
  const GridFunction d = frac_derivative(f, 2.0);
  const ComplexVector expected = (-w * w) * f.samples;
  REQUIRE(max_abs(ComplexVector(d.samples - expected)) < 1e-12);
}

TEST_CASE("integer-order multipliers equal (i w)^alpha on every bin") {
  const auto grid = sample_function(128, kLength,
                                    [](double) { return Complex(0.0, 0.0); });
  for (int alpha = 0; alpha <= 4; ++alpha) {
    const SpectralMultiplier m = build_multiplier(alpha, grid);
    for (std::size_t j = 0; j < grid.n(); ++j) {
      const double w = grid.frequency(j);
      Complex expected(1.0, 0.0);
      for (int e = 0; e < alpha; ++e) expected *= Complex(0.0, w);
      const double scale = std::max(1.0, std::abs(expected));
      REQUIRE(std::abs(m.values(static_cast<Eigen::Index>(j)) - expected) /
                  scale <
              1e-14);
    }
  }
}

TEST_CASE("zero mode: annihilated for alpha > 0, kept for alpha = 0") {
  const auto grid = sample_function(64, kLength,
                                    [](double) { return Complex(1.0, 0.0); });
  REQUIRE(build_multiplier(0.5, grid).values(0) == Complex(0.0, 0.0));
  REQUIRE(build_multiplier(0.0, grid).values(0) == Complex(1.0, 0.0));
  REQUIRE(build_multiplier(-1.0, grid).values(0) == Complex(0.0, 0.0));
}

TEST_CASE("half derivatives compose to the first derivative") {
  const auto f = sample_function(256, kLength, [](double x) {
    return Complex(std::sin(x) + 0.5 * std::cos(2.0 * x), 0.0) +
           0.25 * unit_phase(3.0 * x);
  });
  const auto report = verify_semigroup(f, 0.5, 0.5, 1e-10);
  REQUIRE(report.pass);

  const GridFunction direct = frac_derivative(f, 1.0);
  const GridFunction twice = frac_derivative(frac_derivative(f, 0.5), 0.5);
  REQUIRE(max_abs(ComplexVector(twice.samples - direct.samples)) /
              max_abs(direct.samples) <
          1e-10);
}

TEST_CASE("alpha = 0 composed with anything is exact") {
  const auto f = random_band_limited(128, 9, 8, false);
  const auto report = verify_semigroup(f, 0.0, 1.3, 1e-12);
  REQUIRE(report.pass);
}

TEST_CASE("fractional orders compose on a windowed wave") {
  // window narrow enough that the periodic extension is smooth to machine
  // precision at the wrap point
  const auto f = sample_function(256, kLength, [](double x) {
    const double u = x - kPi;
    return std::exp(-5.0 * u * u) * unit_phase(4.0 * x);
  });
  const auto report = verify_semigroup(f, 0.3, 1.4, 1e-8);
  REQUIRE(report.pass);
}

TEST_CASE("seeded semigroup property over [0,2]^2") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> dist(0.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_band_limited(256, 100 + trial, 12, false);
    const auto report = verify_semigroup(f, dist(rng), dist(rng), 1e-8);
    INFO("trial " << trial);
    REQUIRE(report.pass);
  }
}

TEST_CASE("aliased input violates the band-limit precondition") {
  const std::size_t n = 64;
  const auto f = sample_function(n, kLength, [&](double x) {
    return unit_phase(28.0 * x);  // inside the top quarter for n = 64
  });
  REQUIRE_THROWS_WITH(verify_semigroup(f, 0.5, 0.5, 1e-8),
                      Catch::Matchers::ContainsSubstring("tail"));
}

TEST_CASE("plane waves are eigenfunctions with principal-branch eigenvalues") {
  {
    const auto report = verify_plane_wave_eigen(1.0, 0.5, 64, kLength, 1e-12);
    REQUIRE(report.pass);
  }
  {
    // (2i)^(2/3) = 2^(2/3) e^(i pi / 3)
    const std::size_t n = 64;
    const auto wave =
        sample_function(n, kLength, [](double x) { return unit_phase(2.0 * x); });
    const GridFunction d = frac_derivative(wave, 2.0 / 3.0);
    const Complex expected_ev =
        std::pow(2.0, 2.0 / 3.0) * unit_phase(kPi / 3.0);
    REQUIRE(max_abs(ComplexVector(d.samples - expected_ev * wave.samples)) <
            1e-12);
  }
  {
    // alpha = 1/2, p = 1: eigenvalue e^(i pi / 4)
    const auto wave =
        sample_function(64, kLength, [](double x) { return unit_phase(x); });
    const GridFunction d = frac_derivative(wave, 0.5);
    const Complex expected_ev = unit_phase(kPi / 4.0);
    REQUIRE(max_abs(ComplexVector(d.samples - expected_ev * wave.samples)) <
            1e-12);
  }
  {
    const auto report = verify_plane_wave_eigen(2.0, 2.0, 64, kLength, 1e-10);
    REQUIRE(report.pass);
  }
}

TEST_CASE("off-grid frequencies are rejected") {
  REQUIRE_THROWS_AS(verify_plane_wave_eigen(1.5, 0.5, 64, kLength, 1e-10),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(verify_plane_wave_eigen(40.0, 0.5, 64, kLength, 1e-10),
                    std::invalid_argument);
}

TEST_CASE("the fractional derivative is linear") {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> dist(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_band_limited(128, 300 + trial, 10, false);
    const auto g = random_band_limited(128, 400 + trial, 10, false);
    const Complex a(dist(rng), dist(rng));
    const Complex b(dist(rng), dist(rng));
    const double alpha = 0.25 * static_cast<double>(trial);
    GridFunction combo = f;
    combo.samples = a * f.samples + b * g.samples;
    const GridFunction lhs = frac_derivative(combo, alpha);
    const ComplexVector rhs = a * frac_derivative(f, alpha).samples +
                              b * frac_derivative(g, alpha).samples;
    const double scale = std::max(max_abs(rhs), 1.0);
    REQUIRE(max_abs(ComplexVector(lhs.samples - rhs)) / scale < 1e-12);
  }
}

TEST_CASE("integration by parts at alpha = 1 on real fields") {
  // modes overlap so the inner products are O(1), not orthogonality zeros
  const auto f = sample_function(256, kLength, [](double x) {
    return Complex(std::sin(x) + 0.3 * std::cos(3.0 * x), 0.0);
  });
  const auto g = sample_function(256, kLength, [](double x) {
    return Complex(std::cos(x) + 0.2 * std::sin(3.0 * x), 0.0);
  });
  const auto report = verify_adjoint_identity(f, g, 1.0, 1e-12);
  REQUIRE(report.pass);

  const Complex lhs = inner_product(frac_derivative(f, 1.0), g);
  const Complex rhs = -inner_product(f, frac_derivative(g, 1.0));
  REQUIRE(std::abs(rhs) > 0.1);
  REQUIRE(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
}

TEST_CASE("alpha = 0 adjoint identity reduces to <f, g> on both sides") {
  const auto f = random_band_limited(128, 21, 8, true);
  const auto report = verify_adjoint_identity(f, f, 0.0, 1e-12);
  REQUIRE(report.pass);
}

TEST_CASE("fractional adjoint identity on nonnegative-frequency fields") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto f = random_band_limited(256, 500 + seed, 12, true);
    const auto g = random_band_limited(256, 600 + seed, 12, true);
    const double alpha = 2.0 * static_cast<double>(seed) / 14.0;
    const auto report = verify_adjoint_identity(f, g, alpha, 1e-10);
    INFO("seed " << seed << " alpha " << alpha);
    REQUIRE(report.pass);
  }
}

TEST_CASE("negative-frequency modes break the fractional adjoint identity") {
  // w^alpha is not real on the negative axis, so the identity is restricted
  // to the nonnegative-frequency subspace for fractional alpha. Measure the
  // deviation to document it.
  const auto f =
      sample_function(128, kLength, [](double x) { return unit_phase(-3.0 * x); });
  const auto report = verify_adjoint_identity(f, f, 0.7, 1e-10);
  REQUIRE_FALSE(report.pass);
  REQUIRE(report.max_residual > 0.1);
}

TEST_CASE("grid mismatch is a domain error") {
  const auto f = random_band_limited(128, 1, 8, false);
  const auto g = random_band_limited(256, 2, 8, false);
  REQUIRE_THROWS_AS(verify_adjoint_identity(f, g, 0.5, 1e-10),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(inner_product(f, g), std::invalid_argument);
}

TEST_CASE("non-finite samples are rejected") {
  GridFunction f = random_band_limited(64, 3, 8, false);
  f.samples(5) = Complex(std::numeric_limits<double>::infinity(), 0.0);
  REQUIRE_THROWS_AS(frac_derivative(f, 0.5), std::invalid_argument);
}

TEST_CASE("negative order integrates mean-zero fields") {
  const auto f =
      sample_function(128, kLength, [](double x) { return unit_phase(2.0 * x); });
  const GridFunction integral = frac_derivative(f, -1.0);
  const GridFunction back = frac_derivative(integral, 1.0);
  REQUIRE(max_abs(ComplexVector(back.samples - f.samples)) < 1e-12);
}

TEST_CASE("grid construction validates shape") {
  REQUIRE_THROWS_AS(make_grid_function(ComplexVector::Zero(7), 1.0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_grid_function(ComplexVector::Zero(12), 1.0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_grid_function(ComplexVector::Zero(16), -1.0),
                    std::invalid_argument);
  REQUIRE_NOTHROW(make_grid_function(ComplexVector::Zero(16), 1.0));
}
