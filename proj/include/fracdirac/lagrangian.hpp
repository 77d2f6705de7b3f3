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

#pragma once

#include <stdexcept>
#include <vector>

#include "fracdirac/grid.hpp"
#include "fracdirac/spectral.hpp"
#include "fracdirac/types.hpp"

namespace fracdirac {

/// L(psi, d^alpha psi) = (kinetic_coefficient / 2) (d^alpha psi)^2 + V(psi),
/// with V given by plain power-series coefficients: V(psi) = sum_j potential[j] psi^j.
struct LagrangianSpec {
  double kinetic_coefficient = 1.0;
  std::vector<double> potential;  // coefficient of psi^j at index j, degree <= 6
  double alpha = 1.0;
};

inline void validate(const LagrangianSpec& spec) {
  if (spec.potential.size() > 7)
    throw std::invalid_argument("LagrangianSpec: potential degree must be <= 6");
}

/// Pointwise residual of dL/dpsi + e^{-i pi alpha} d^alpha (dL/d(d^alpha psi)).
/// At alpha = 1 the prefactor e^{-i pi} = -1 turns the second term into
/// -d/dx(dL/dpsi'), the classical Euler-Lagrange combination.
inline GridFunction euler_lagrange_residual(const LagrangianSpec& spec,
                                            const GridFunction& psi) {
  validate(spec);
  ComplexVector v_prime = ComplexVector::Zero(psi.samples.size());
  for (std::size_t j = 1; j < spec.potential.size(); ++j) {
    if (spec.potential[j] == 0.0) continue;
    for (Eigen::Index i = 0; i < psi.samples.size(); ++i) {
      Complex p(1.0, 0.0);
      for (std::size_t e = 0; e + 1 < j; ++e) p *= psi.samples(i);
      v_prime(i) += static_cast<double>(j) * spec.potential[j] * p;
    }
  }

  GridFunction momentum = frac_derivative(psi, spec.alpha);
  momentum.samples *= spec.kinetic_coefficient;
  const GridFunction outer = frac_derivative(momentum, spec.alpha);

  ComplexVector residual =
      v_prime + unit_phase(-kPi * spec.alpha) * outer.samples;
  return GridFunction{std::move(residual), psi.length};
}

}  // namespace fracdirac
