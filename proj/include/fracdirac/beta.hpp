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

#include <array>
#include <stdexcept>

#include "fracdirac/matrix_utils.hpp"
#include "fracdirac/pauli.hpp"
#include "fracdirac/types.hpp"

namespace fracdirac {

/// The four k^2 x k^2 coefficient matrices of the order-k linearization:
///
///   beta^0 = sigma3 (x) I_k
///   beta^j = xi * (sigma2 (x) sigma^j),  j = 1,2,3
///
/// together with the A-form variant A^0 = beta^0, A^j = xi * beta^j.
/// Every beta^mu is unitary.
struct BetaRep {
  int k = 0;
  PauliSet pauli;
  std::array<ComplexMatrix, 4> beta;
  std::array<ComplexMatrix, 4> a;

  int dim() const { return k * k; }
};

inline BetaRep build_beta(int k) {
  if (k < 2) throw std::invalid_argument("build_beta: order k must be >= 2");
  BetaRep rep;
  rep.k = k;
  rep.pauli = build_pauli(k);
  const ComplexMatrix eye = ComplexMatrix::Identity(k, k);
  rep.beta[0] = kronecker(rep.pauli.sigma3, eye);
  for (int j = 1; j <= 3; ++j)
    rep.beta[j] = rep.pauli.xi * kronecker(rep.pauli.sigma2, rep.pauli.sigma(j));
  rep.a[0] = rep.beta[0];
  for (int j = 1; j <= 3; ++j) rep.a[j] = rep.pauli.xi * rep.beta[j];
  return rep;
}

}  // namespace fracdirac
