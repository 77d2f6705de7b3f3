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
#include <cstddef>
#include <vector>

#include "fracdirac/types.hpp"

namespace fracdirac {

/// Dense univariate polynomial with complex coefficients, coefficient of x^j
/// at index j. Just enough arithmetic for exact operator algebra on
/// polynomial test functions.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial monomial(std::size_t degree, Complex coeff) {
    std::vector<Complex> c(degree + 1, Complex(0.0, 0.0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  const std::vector<Complex>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  Complex coefficient(std::size_t j) const {
    return j < c_.size() ? c_[j] : Complex(0.0, 0.0);
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j)
      d[j - 1] = static_cast<double>(j) * c_[j];
    return Polynomial(std::move(d));
  }

  Polynomial times_x() const {
    if (c_.empty()) return Polynomial();
    std::vector<Complex> d(c_.size() + 1, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < c_.size(); ++j) d[j + 1] = c_[j];
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Complex(0.0, 0.0));
    for (std::size_t j = 0; j < other.c_.size(); ++j) c_[j] += other.c_[j];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }

  friend Polynomial operator*(Complex s, Polynomial p) {
    for (auto& v : p.c_) v *= s;
    p.trim();
    return p;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + Complex(-1.0, 0.0) * b;
  }

  Complex eval(Complex x) const {
    Complex acc(0.0, 0.0);
    for (std::size_t j = c_.size(); j-- > 0;) acc = acc * x + c_[j];
    return acc;
  }

  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Complex(0.0, 0.0)) c_.pop_back();
  }

  std::vector<Complex> c_;
};

inline double max_abs_coefficient_diff(const Polynomial& a, const Polynomial& b) {
  return (a - b).max_abs_coefficient();
}

}  // namespace fracdirac
