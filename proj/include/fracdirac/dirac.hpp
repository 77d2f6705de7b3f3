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

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracdirac/beta.hpp"
#include "fracdirac/matrix_utils.hpp"
#include "fracdirac/types.hpp"
#include "fracdirac/verification.hpp"

namespace fracdirac {

struct PhysicalUnits {
  double hbar = 1.0;
  double c = 1.0;
  double mass = 1.0;
};

inline void validate(const PhysicalUnits& u) {
  if (!(u.hbar > 0.0) || !(u.c > 0.0) || u.mass < 0.0)
    throw std::invalid_argument("PhysicalUnits: require hbar > 0, c > 0, mass >= 0");
}

/// p0 is the energy component E / c; p the spatial momentum.
struct FourMomentum {
  double p0 = 0.0;
  std::array<double, 3> p{0.0, 0.0, 0.0};
};

/// Exponent sign of the plane wave e^{+- i p x / hbar} a solution family
/// belongs to. The plus family reduces with the phase e^{2 pi i / k}, the
/// minus family with e^{4 pi i / k}.
enum class SolutionSign { plus, minus };

inline Complex family_phase(int k, SolutionSign sign) {
  return unit_phase((sign == SolutionSign::plus ? 2.0 : 4.0) * kPi / k);
}

inline const char* to_string(SolutionSign sign) {
  return sign == SolutionSign::plus ? "plus" : "minus";
}

/// Plane-wave symbol of the fractional Dirac operator:
///   phase * (beta^0 p0^{2/k} + sum_j beta^j p_j^{2/k}) - (m c)^{2/k} I.
/// Fractional powers are principal-branch; negative momentum components pick
/// up the arg = pi branch and are allowed, but the standard sampling keeps
/// spatial momenta nonnegative.
inline ComplexMatrix build_symbol(int k, const FourMomentum& mom,
                                  const PhysicalUnits& units, Complex phase) {
  if (k < 2) throw std::invalid_argument("build_symbol: order k must be >= 2");
  validate(units);
  const BetaRep rep = build_beta(k);
  const double frac = 2.0 / static_cast<double>(k);
  ComplexMatrix sum = std::pow(Complex(mom.p0, 0.0), frac) * rep.beta[0];
  for (int j = 0; j < 3; ++j)
    sum += std::pow(Complex(mom.p[static_cast<std::size_t>(j)], 0.0), frac) *
           rep.beta[static_cast<std::size_t>(j) + 1];
  const double mass_term = std::pow(units.mass * units.c, frac);
  return phase * sum -
         mass_term * ComplexMatrix::Identity(rep.dim(), rep.dim());
}

namespace detail {

/// log |det M| via LU, immune to under/overflow of the raw determinant.
inline double log_abs_det(const ComplexMatrix& m) {
  Eigen::PartialPivLU<ComplexMatrix> lu(m);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double d = std::abs(lu.matrixLU()(i, i));
    if (d == 0.0) return -std::numeric_limits<double>::infinity();
    acc += std::log(d);
  }
  return acc;
}

inline double operator_norm(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

}  // namespace detail

/// |det(symbol)| / ||symbol||_2^{k^2}, a scale-invariant quantity in [0, 1].
/// It vanishes exactly when E^2 = p^2 c^2 + m^2 c^4 (with p0 = E / c).
inline double dispersion_residual(int k, double energy,
                                  const std::array<double, 3>& p,
                                  const PhysicalUnits& units) {
  FourMomentum mom;
  mom.p0 = energy / units.c;
  mom.p = p;
  const ComplexMatrix symbol =
      build_symbol(k, mom, units, unit_phase(2.0 * kPi / k));
  const double norm = detail::operator_norm(symbol);
  if (norm == 0.0) return 0.0;
  const double log_ratio = detail::log_abs_det(symbol) -
                           static_cast<double>(k) * k * std::log(norm);
  return std::exp(log_ratio);
}

/// Rest-frame solution family: orthonormal nullspace basis of
/// (phase * beta^0 - I) with the SVD threshold 1e-10 * sigma_max, plus the
/// standard-basis positions the family occupies.
struct SolutionSet {
  int k = 0;
  SolutionSign sign = SolutionSign::plus;
  int dimension = 0;
  std::vector<ComplexVector> basis;
  std::vector<int> free_indices;  // 1-based
  std::vector<double> singular_values;
};

inline SolutionSet rest_frame_solutions(int k, SolutionSign sign) {
  if (k < 2)
    throw std::invalid_argument("rest_frame_solutions: order k must be >= 2");
  const BetaRep rep = build_beta(k);
  const Eigen::Index d = rep.dim();
  const ComplexMatrix condition =
      family_phase(k, sign) * rep.beta[0] - ComplexMatrix::Identity(d, d);

  Eigen::JacobiSVD<ComplexMatrix> svd(condition, Eigen::ComputeFullV);
  const Eigen::VectorXd sigma = svd.singularValues();
  const double threshold = 1e-10 * sigma(0);

  SolutionSet out;
  out.k = k;
  out.sign = sign;
  out.singular_values.assign(sigma.data(), sigma.data() + sigma.size());
  Eigen::Index nullity = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) <= threshold) ++nullity;
  out.dimension = static_cast<int>(nullity);
  for (Eigen::Index c = d - nullity; c < d; ++c)
    out.basis.emplace_back(svd.matrixV().col(c));

  for (Eigen::Index i = 0; i < d; ++i) {
    for (const auto& v : out.basis) {
      if (std::abs(v(i)) > 1e-8) {
        out.free_indices.push_back(static_cast<int>(i) + 1);
        break;
      }
    }
  }
  return out;
}

/// Free-index range stated for the plus-sign family: k(k-2)+1 .. k(k-1).
inline std::pair<int, int> stated_plus_free_range(int k) {
  return {k * (k - 2) + 1, k * (k - 1)};
}

/// Free-index range stated for the minus-sign family: k(k-1)+1 .. k^2.
/// The condition e^{4 pi i / k} omega^j = 1 actually selects block j = k - 2
/// for k >= 3 (components k(k-3)+1 .. k(k-2)); both descriptions agree only
/// at k = 2. Callers should compare against the SVD-computed indices.
inline std::pair<int, int> stated_minus_free_range(int k) {
  return {k * (k - 1) + 1, k * k};
}

/// Number of plane-wave families across both exponent signs; equals 2k.
inline int count_solutions(int k) {
  return rest_frame_solutions(k, SolutionSign::plus).dimension +
         rest_frame_solutions(k, SolutionSign::minus).dimension;
}

/// One sampled exponent coefficient a (|a| = 1) of the ansatz e^{a p x / hbar}.
/// admissible: a^{2/k} e^{i pi / k} lands on a half-step phase e^{i pi m / k};
/// physical: it lands on a full root of unity e^{2 pi i m / k}, which is what
/// actually frees k components of the reduced equation. The admissible set is
/// {1, i, -1, -i} for every k; only +-i are physical plane waves, while +-1
/// give real exponentials whose Fourier transforms do not converge.
struct AnsatzCase {
  Complex a;
  double distance = 0.0;  // min distance of a^{2/k} e^{i pi/k} to a half-step phase
  bool admissible = false;
  bool physical = false;
};

inline std::vector<AnsatzCase> classify_exponential_ansatz(int k) {
  if (k < 2)
    throw std::invalid_argument("classify_exponential_ansatz: order k must be >= 2");
  constexpr int kSamples = 360;
  constexpr double kTol = 1e-9;
  std::vector<AnsatzCase> out;
  out.reserve(kSamples);
  for (int deg = 0; deg < kSamples; ++deg) {
    AnsatzCase c;
    switch (deg) {  // exact unit values at the cardinal angles
      case 0: c.a = Complex(1.0, 0.0); break;
      case 90: c.a = Complex(0.0, 1.0); break;
      case 180: c.a = Complex(-1.0, 0.0); break;
      case 270: c.a = Complex(0.0, -1.0); break;
      default: c.a = unit_phase(2.0 * kPi * deg / kSamples); break;
    }
    const Complex value =
        std::pow(c.a, 2.0 / static_cast<double>(k)) * unit_phase(kPi / k);
    double best_any = 2.0, best_full = 2.0;
    for (int m = 0; m < 2 * k; ++m) {
      const double dist = std::abs(value - unit_phase(kPi * m / k));
      best_any = std::min(best_any, dist);
      if (m % 2 == 0) best_full = std::min(best_full, dist);
    }
    c.distance = best_any;
    c.admissible = best_any <= kTol;
    c.physical = c.admissible && best_full <= kTol;
    out.push_back(c);
  }
  return out;
}

/// || symbol . u || <= tol * || u || for every basis vector of the family,
/// with the symbol evaluated at the on-shell rest-frame momentum p0 = m c.
inline VerificationReport verify_solution_residual(int k, const SolutionSet& sol,
                                                   const FourMomentum& mom,
                                                   const PhysicalUnits& units,
                                                   double tol) {
  const ComplexMatrix symbol = build_symbol(k, mom, units, family_phase(k, sol.sign));
  VerificationReport report("rest_frame_solution_residual", tol);
  report.add_param("k", k);
  report.add_param("sign", to_string(sol.sign));
  report.add_param("p0", mom.p0);
  for (std::size_t i = 0; i < sol.basis.size(); ++i) {
    const ComplexVector& u = sol.basis[i];
    report.add_case("basis vector " + std::to_string(i),
                    (symbol * u).norm() / u.norm());
  }
  return report;
}

}  // namespace fracdirac
