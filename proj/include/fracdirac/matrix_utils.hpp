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
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "fracdirac/types.hpp"

namespace fracdirac {

inline ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

/// M^n for n >= 0 by plain repeated multiplication; exponents here are tiny.
inline ComplexMatrix matrix_power(const ComplexMatrix& m, int n) {
  if (n < 0) throw std::invalid_argument("matrix_power: negative exponent");
  ComplexMatrix acc = ComplexMatrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < n; ++i) acc = acc * m;
  return acc;
}

/// Entrywise max-magnitude norm, the residual norm used throughout.
inline double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

inline double max_abs(const ComplexVector& v) {
  if (v.size() == 0) return 0.0;
  return v.cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs(ComplexMatrix(a - b));
}

inline bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

inline bool all_finite(const ComplexVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) return false;
  return true;
}

inline void require_square_same_dim(const ComplexMatrix& a,
                                    const ComplexMatrix& b,
                                    const char* who) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument(std::string(who) +
                                ": matrices must be square with equal dimension");
}

}  // namespace fracdirac
