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

#include "fracdirac/dirac.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "fracdirac/beta.hpp"
#include "fracdirac/matrix_utils.hpp"

using namespace fracdirac;

namespace {

std::vector<int> contiguous_range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("k = 2 rest-frame symbol has the Dirac shape -beta0 mc - mc I") {
  PhysicalUnits units{1.0, 1.0, 1.3};
  FourMomentum mom;
  mom.p0 = units.mass * units.c;
  const ComplexMatrix symbol = build_symbol(2, mom, units, unit_phase(kPi));
  const BetaRep rep = build_beta(2);
  const double mc = units.mass * units.c;
  const ComplexMatrix expected =
      -mc * rep.beta[0] - mc * ComplexMatrix::Identity(4, 4);
  REQUIRE(max_abs_diff(symbol, expected) < 1e-13);
}

TEST_CASE("massless k = 3 symbol is phase * beta0 * p0^(2/3)") {
  PhysicalUnits units{1.0, 1.0, 0.0};
  FourMomentum mom;
  mom.p0 = 2.0;
  const Complex phase = unit_phase(2.0 * kPi / 3.0);
  const ComplexMatrix symbol = build_symbol(3, mom, units, phase);
  const BetaRep rep = build_beta(3);
  const ComplexMatrix expected =
      phase * std::pow(Complex(2.0, 0.0), 2.0 / 3.0) * rep.beta[0];
  REQUIRE(max_abs_diff(symbol, expected) < 1e-13);
}

TEST_CASE("k = 3 unit-momentum symbol carries e^{2 pi i/3} omega^j - 1 blocks") {
  PhysicalUnits units{1.0, 1.0, 1.0};
  FourMomentum mom;
  mom.p0 = 1.0;
  const ComplexMatrix symbol =
      build_symbol(3, mom, units, unit_phase(2.0 * kPi / 3.0));
  for (int block = 0; block < 3; ++block) {
    const Complex expected =
        unit_phase(2.0 * kPi / 3.0) * unit_phase(2.0 * kPi * (block + 1) / 3.0) -
        1.0;
    for (int inner = 0; inner < 3; ++inner) {
      const int i = 3 * block + inner;
      REQUIRE(std::abs(symbol(i, i) - expected) < 1e-14);
    }
  }
}

TEST_CASE("dispersion residual vanishes on shell and not off shell") {
  PhysicalUnits units{1.0, 1.0, 1.0};
  REQUIRE(dispersion_residual(2, 1.0, {0.0, 0.0, 0.0}, units) < 1e-10);
  REQUIRE(dispersion_residual(2, 2.0, {0.0, 0.0, 0.0}, units) > 1e-3);
  REQUIRE(dispersion_residual(3, std::sqrt(1.36), {0.6, 0.0, 0.0}, units) <
          1e-9);
}

TEST_CASE("off-shell determinant magnitude matches the closed form |m^2c^2 - s|^k") {
  // independent oracle: det(phase * S - d I) = +- (d^k / phase^k - s)^k
  // with s = p0^2 - |p|^2, evaluated off shell where both sides are benign
  PhysicalUnits units{1.0, 1.0, 1.2};
  const std::array<double, 3> p{0.5, 0.1, 0.8};
  for (int k = 2; k <= 5; ++k) {
    const double energy = 1.25 * std::sqrt(0.9 + units.mass * units.mass);
    const double s = energy * energy - (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    FourMomentum mom;
    mom.p0 = energy;
    mom.p = p;
    const ComplexMatrix symbol =
        build_symbol(k, mom, units, unit_phase(2.0 * kPi / k));
    Eigen::JacobiSVD<ComplexMatrix> svd(symbol);
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      log_det += std::log(svd.singularValues()(i));
    const double closed =
        static_cast<double>(k) *
        std::log(std::abs(std::pow(units.mass * units.c, 2.0) - s));
    REQUIRE(std::abs(log_det - closed) < 1e-8 * std::max(1.0, std::abs(closed)));

    const double direct = dispersion_residual(k, energy, p, units);
    const double norm_log = static_cast<double>(k) * k *
                            std::log(svd.singularValues()(0));
    REQUIRE(std::abs(std::log(direct) - (closed - norm_log)) < 1e-8);
  }
}

TEST_CASE("rest-frame nullspaces have dimension k with a hard SVD gap") {
  for (int k = 2; k <= 5; ++k) {
    for (const auto sign : {SolutionSign::plus, SolutionSign::minus}) {
      const SolutionSet sol = rest_frame_solutions(k, sign);
      INFO("k = " << k << " sign " << to_string(sign));
      REQUIRE(sol.dimension == k);
      REQUIRE(sol.basis.size() == static_cast<std::size_t>(k));
      const int d = k * k;
      const double kept = sol.singular_values[static_cast<std::size_t>(d - k - 1)];
      const double dropped = sol.singular_values[static_cast<std::size_t>(d - k)];
      REQUIRE(kept / std::max(dropped, 1e-300) > 1e6);
    }
  }
}

TEST_CASE("free indices: plus matches the stated range, minus only at k = 2") {
  {
    const SolutionSet sol = rest_frame_solutions(3, SolutionSign::plus);
    REQUIRE(sol.free_indices == contiguous_range(4, 6));
    const auto stated = stated_plus_free_range(3);
    REQUIRE(sol.free_indices.front() == stated.first);
    REQUIRE(sol.free_indices.back() == stated.second);
  }
  {
    const SolutionSet sol = rest_frame_solutions(2, SolutionSign::minus);
    const auto stated = stated_minus_free_range(2);
    REQUIRE(sol.free_indices == contiguous_range(stated.first, stated.second));
  }
  {
    // for k >= 3 the computed block is k(k-3)+1 .. k(k-2), not the stated one
    const SolutionSet sol = rest_frame_solutions(3, SolutionSign::minus);
    REQUIRE(sol.free_indices == contiguous_range(1, 3));
    const auto stated = stated_minus_free_range(3);
    REQUIRE(sol.free_indices.front() != stated.first);
  }
  {
    const SolutionSet sol = rest_frame_solutions(5, SolutionSign::minus);
    REQUIRE(sol.free_indices == contiguous_range(5 * 2 + 1, 5 * 3));
  }
}

TEST_CASE("rest-frame basis vectors are orthonormal and annihilated") {
  const SolutionSet sol = rest_frame_solutions(4, SolutionSign::plus);
  const BetaRep rep = build_beta(4);
  const ComplexMatrix condition =
      family_phase(4, SolutionSign::plus) * rep.beta[0] -
      ComplexMatrix::Identity(16, 16);
  for (std::size_t i = 0; i < sol.basis.size(); ++i) {
    REQUIRE((condition * sol.basis[i]).norm() < 1e-12);
    for (std::size_t j = 0; j < sol.basis.size(); ++j) {
      const Complex dot = sol.basis[i].dot(sol.basis[j]);
      REQUIRE(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("solution counting gives 2k") {
  REQUIRE(count_solutions(2) == 4);
  REQUIRE(count_solutions(3) == 6);
  REQUIRE(count_solutions(5) == 10);
}

TEST_CASE("solution residuals vanish for family members, not for mutants") {
  PhysicalUnits units{1.0, 1.0, 1.0};
  FourMomentum rest;
  rest.p0 = units.mass * units.c;

  for (const auto sign : {SolutionSign::plus, SolutionSign::minus}) {
    const SolutionSet sol = rest_frame_solutions(3, sign);
    const auto report = verify_solution_residual(3, sol, rest, units, 1e-11);
    INFO("sign " << to_string(sign));
    REQUIRE(report.pass);
    REQUIRE(report.cases.size() == 3);
  }

  // adding weight on a non-free coordinate leaves the kernel
  SolutionSet sol = rest_frame_solutions(3, SolutionSign::plus);
  ComplexVector mutated = sol.basis[0];
  mutated(8) += 0.1;  // index 9 is outside the free block 4..6
  sol.basis[0] = mutated;
  const auto report = verify_solution_residual(3, sol, rest, units, 1e-11);
  REQUIRE_FALSE(report.pass);
  REQUIRE(report.max_residual > 1e-2);
}

TEST_CASE("k = 2 solution spaces recover the four-dimensional Dirac structure") {
  REQUIRE(rest_frame_solutions(2, SolutionSign::plus).dimension == 2);
  REQUIRE(rest_frame_solutions(2, SolutionSign::minus).dimension == 2);
}

TEST_CASE("exponential ansatz: only the fourth roots of unity are admissible") {
  for (int k : {2, 3, 7, 12}) {
    const auto cases = classify_exponential_ansatz(k);
    REQUIRE(cases.size() == 360);
    int admissible = 0, physical = 0;
    for (const auto& c : cases) {
      admissible += c.admissible ? 1 : 0;
      physical += c.physical ? 1 : 0;
    }
    INFO("k = " << k);
    REQUIRE(admissible == 4);
    REQUIRE(physical == 2);
    REQUIRE(cases[0].admissible);    // a = 1
    REQUIRE(cases[90].admissible);   // a = i
    REQUIRE(cases[180].admissible);  // a = -1
    REQUIRE(cases[270].admissible);  // a = -i
    REQUIRE(cases[90].physical);
    REQUIRE(cases[270].physical);
    REQUIRE_FALSE(cases[0].physical);
    REQUIRE_FALSE(cases[180].physical);
  }
}

TEST_CASE("a = e^{i pi/3} misses every phase target by a wide margin") {
  const auto cases = classify_exponential_ansatz(3);
  REQUIRE_FALSE(cases[60].admissible);
  REQUIRE(cases[60].distance > 0.1);
}

TEST_CASE("invalid orders and units are rejected") {
  REQUIRE_THROWS_AS(rest_frame_solutions(1, SolutionSign::plus),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(classify_exponential_ansatz(1), std::invalid_argument);
  PhysicalUnits bad{0.0, 1.0, 1.0};
  FourMomentum mom;
  REQUIRE_THROWS_AS(build_symbol(2, mom, bad, Complex(1.0, 0.0)),
                    std::invalid_argument);
}
