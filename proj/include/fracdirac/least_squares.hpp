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

#include <cmath>
#include <functional>
#include <limits>

#include "fracdirac/types.hpp"

namespace fracdirac {

/// Damped (Levenberg-Marquardt style) least squares over a real parameter
/// vector. Jacobians are central finite differences; the normal equations
/// are solved with an LDLT factorization. Fully deterministic for a fixed
/// starting point.
struct LeastSquaresOptions {
  int max_iterations = 200;
  double objective_tol = 0.0;   // stop once sum of squares <= this
  double step_tol = 1e-14;      // stop when the accepted step is this small
  double initial_damping = 1e-3;
};

struct LeastSquaresResult {
  RealVector x;
  double objective = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

inline LeastSquaresResult damped_least_squares(
    const std::function<RealVector(const RealVector&)>& residual,
    RealVector x0, const LeastSquaresOptions& options = {}) {
  const auto objective_of = [&](const RealVector& r) { return r.squaredNorm(); };

  RealVector x = std::move(x0);
  RealVector r = residual(x);
  double objective = objective_of(r);
  double damping = options.initial_damping;

  LeastSquaresResult result;
  const Eigen::Index n = x.size();

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    result.iterations = iter + 1;
    if (objective <= options.objective_tol) break;

    RealMatrix jac(r.size(), n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double h = 1e-7 * std::max(1.0, std::abs(x(j)));
      RealVector xp = x, xm = x;
      xp(j) += h;
      xm(j) -= h;
      jac.col(j) = (residual(xp) - residual(xm)) / (2.0 * h);
    }

    const RealMatrix jtj = jac.transpose() * jac;
    const RealVector gradient = jac.transpose() * r;

    bool accepted = false;
    for (int attempt = 0; attempt < 40; ++attempt) {
      RealMatrix damped = jtj;
      damped.diagonal().array() += damping;
      const RealVector step = damped.ldlt().solve(-gradient);
      const RealVector x_new = x + step;
      const RealVector r_new = residual(x_new);
      const double obj_new = objective_of(r_new);
      if (obj_new < objective) {
        const double step_norm = step.norm();
        x = x_new;
        r = r_new;
        objective = obj_new;
        damping = std::max(damping / 3.0, 1e-12);
        accepted = true;
        if (step_norm <= options.step_tol * std::max(1.0, x.norm())) iter = options.max_iterations;
        break;
      }
      damping *= 4.0;
      if (damping > 1e14) break;
    }
    if (!accepted) break;
  }

  result.x = std::move(x);
  result.objective = objective;
  return result;
}

}  // namespace fracdirac
