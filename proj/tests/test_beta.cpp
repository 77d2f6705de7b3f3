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

#include "fracdirac/beta.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "fracdirac/clifford.hpp"
#include "fracdirac/matrix_utils.hpp"

using namespace fracdirac;

TEST_CASE("k = 2: beta0 = J (x) I = diag(-1,-1,1,1)") {
  const BetaRep rep = build_beta(2);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = -1.0;
  expected(1, 1) = -1.0;
  expected(2, 2) = 1.0;
  expected(3, 3) = 1.0;
  REQUIRE(max_abs_diff(rep.beta[0], expected) < 1e-15);
}

TEST_CASE("k = 2: spatial betas square to -I") {
  const BetaRep rep = build_beta(2);
  const ComplexMatrix eye = ComplexMatrix::Identity(4, 4);
  for (int j = 1; j <= 3; ++j)
    REQUIRE(max_abs(ComplexMatrix(rep.beta[j] * rep.beta[j] + eye)) < 1e-15);
}

TEST_CASE("k = 3: beta0 cubes to the identity") {
  const BetaRep rep = build_beta(3);
  REQUIRE(max_abs_diff(matrix_power(rep.beta[0], 3),
                       ComplexMatrix::Identity(9, 9)) < 1e-14);
}

TEST_CASE("k = 2 recovers the (+,-,-,-) anticommutator table") {
  const BetaRep rep = build_beta(2);
  const ComplexMatrix eye = ComplexMatrix::Identity(4, 4);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      double metric = 0.0;
      if (mu == nu) metric = (mu == 0) ? 1.0 : -1.0;
      const ComplexMatrix anti =
          rep.beta[mu] * rep.beta[nu] + rep.beta[nu] * rep.beta[mu];
      REQUIRE(max_abs(ComplexMatrix(anti - 2.0 * metric * eye)) < 1e-14);
    }
  }
}

TEST_CASE("A-form differs from the beta-form by the xi phase on spatial parts") {
  const BetaRep rep = build_beta(4);
  REQUIRE(max_abs_diff(rep.a[0], rep.beta[0]) == 0.0);
  for (int j = 1; j <= 3; ++j)
    REQUIRE(max_abs_diff(rep.a[j], ComplexMatrix(rep.pauli.xi * rep.beta[j])) ==
            0.0);
}

TEST_CASE("beta adjoint relations and unitarity hold through k = 7") {
  for (int k = 2; k <= 7; ++k) {
    const auto report = verify_beta_adjoint_unitarity(k, 1e-12);
    INFO("k = " << k << " max residual " << report.max_residual);
    REQUIRE(report.pass);
    REQUIRE(report.cases.size() == 8);
  }
}

TEST_CASE("beta construction rejects orders below 2") {
  REQUIRE_THROWS_AS(build_beta(1), std::invalid_argument);
}
