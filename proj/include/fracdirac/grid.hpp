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

#include <bit>
#include <cstddef>
#include <functional>
#include <stdexcept>

#include "fracdirac/matrix_utils.hpp"
#include "fracdirac/types.hpp"

namespace fracdirac {

/// Uniform complex samples of a function on the periodic interval [0, L).
/// The sample count must be a power of two (>= 8) so the spectrum is fully
/// resolved by the FFT without padding decisions.
struct GridFunction {
  ComplexVector samples;
  double length = 0.0;

  std::size_t n() const { return static_cast<std::size_t>(samples.size()); }
  double spacing() const { return length / static_cast<double>(n()); }
  double point(std::size_t j) const {
    return length * static_cast<double>(j) / static_cast<double>(n());
  }

  /// Signed integer frequency index of FFT bin j: 0..n/2 then negative.
  /// The unpaired Nyquist bin (even n) is treated as positive.
  long frequency_index(std::size_t j) const {
    const long nn = static_cast<long>(n());
    const long jj = static_cast<long>(j);
    return jj <= nn / 2 ? jj : jj - nn;
  }

  /// Angular frequency (radians per unit length) of bin j.
  double frequency(std::size_t j) const {
    return 2.0 * kPi * static_cast<double>(frequency_index(j)) / length;
  }
};

inline GridFunction make_grid_function(ComplexVector samples, double length) {
  const auto n = static_cast<std::size_t>(samples.size());
  if (n < 8 || !std::has_single_bit(n))
    throw std::invalid_argument(
        "make_grid_function: sample count must be a power of two >= 8");
  if (!(length > 0.0))
    throw std::invalid_argument("make_grid_function: length must be positive");
  if (!all_finite(samples))
    throw std::invalid_argument("make_grid_function: samples must be finite");
  return GridFunction{std::move(samples), length};
}

inline GridFunction sample_function(std::size_t n, double length,
                                    const std::function<Complex(double)>& f) {
  ComplexVector v(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j)
    v(static_cast<Eigen::Index>(j)) = f(length * static_cast<double>(j) /
                                        static_cast<double>(n));
  return make_grid_function(std::move(v), length);
}

inline void require_same_grid(const GridFunction& f, const GridFunction& g,
                              const char* who) {
  if (f.n() != g.n() || f.length != g.length)
    throw std::invalid_argument(std::string(who) +
                                ": grid functions live on different grids");
}

}  // namespace fracdirac
