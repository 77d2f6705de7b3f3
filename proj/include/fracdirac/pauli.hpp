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

#include "fracdirac/matrix_utils.hpp"
#include "fracdirac/types.hpp"

namespace fracdirac {

/// Order-k generalized Pauli matrices built from the shift matrix P, the
/// clock matrix J and the phase matrix K:
///
///   P_{ij} = delta_{i+1,j}   (1-based, wrapping: delta_{i+1-k,j} for i+1 > k)
///   J_{ij} = omega^j delta_{ij},    omega = e^{2 pi i / k}
///   K_{ij} = -xi^{2j-1} delta_{ij}, xi    = e^{pi i / k}
///
/// sigma1 = P and sigma3 = J for every k; sigma2 = J P for odd k and K P for
/// even k. All three have order dividing 2k; sigma1 and sigma3 satisfy
/// sigma^k = I, and (sigma2)^k = sigma2_kth_power_sign * I with the sign
/// recorded at construction.
struct PauliSet {
  int k = 0;
  Complex omega;
  Complex xi;
  ComplexMatrix sigma1;
  ComplexMatrix sigma2;
  ComplexMatrix sigma3;
  double sigma2_kth_power_sign = 1.0;

  const ComplexMatrix& sigma(int j) const {
    switch (j) {
      case 1: return sigma1;
      case 2: return sigma2;
      case 3: return sigma3;
      default: throw std::invalid_argument("PauliSet::sigma: index must be 1..3");
    }
  }
};

inline ComplexMatrix shift_matrix(int k) {
  ComplexMatrix p = ComplexMatrix::Zero(k, k);
  for (int i = 0; i < k; ++i) p(i, (i + 1) % k) = 1.0;
  return p;
}

inline ComplexMatrix clock_matrix(int k) {
  ComplexMatrix j = ComplexMatrix::Zero(k, k);
  for (int i = 0; i < k; ++i) j(i, i) = unit_phase(2.0 * kPi * (i + 1) / k);
  return j;
}

inline ComplexMatrix phase_matrix(int k) {
  ComplexMatrix m = ComplexMatrix::Zero(k, k);
  for (int i = 0; i < k; ++i)
    m(i, i) = -unit_phase(kPi * (2.0 * (i + 1) - 1.0) / k);
  return m;
}

inline PauliSet build_pauli(int k) {
  if (k < 2) throw std::invalid_argument("build_pauli: order k must be >= 2");
  PauliSet s;
  s.k = k;
  s.omega = unit_phase(2.0 * kPi / k);
  s.xi = unit_phase(kPi / k);
  s.sigma1 = shift_matrix(k);
  s.sigma3 = clock_matrix(k);
  s.sigma2 = (k % 2 == 1) ? ComplexMatrix(s.sigma3 * s.sigma1)
                          : ComplexMatrix(phase_matrix(k) * s.sigma1);
  const ComplexMatrix pk = matrix_power(s.sigma2, k);
  s.sigma2_kth_power_sign = pk(0, 0).real() >= 0.0 ? 1.0 : -1.0;
  return s;
}

}  // namespace fracdirac
