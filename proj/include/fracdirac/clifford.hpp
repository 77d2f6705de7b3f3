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
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracdirac/beta.hpp"
#include "fracdirac/matrix_utils.hpp"
#include "fracdirac/types.hpp"
#include "fracdirac/verification.hpp"

namespace fracdirac {

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

namespace detail {

/// Entry-lexicographic total order; used to canonicalize the factor list so
/// the accumulation order (and hence the rounded result) does not depend on
/// how the caller happened to order the inputs.
inline bool matrix_lexicographic_less(const ComplexMatrix& a,
                                      const ComplexMatrix& b) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j).real() != b(i, j).real()) return a(i, j).real() < b(i, j).real();
      if (a(i, j).imag() != b(i, j).imag()) return a(i, j).imag() < b(i, j).imag();
    }
  return false;
}

}  // namespace detail

/// (1/k!) sum over all permutations of the product of the given matrices,
/// by explicit enumeration of all k! orderings. The factor cap keeps the
/// k! * dim^3 cost desk-scale. Bit-for-bit invariant under permutation of
/// the input list.
inline ComplexMatrix symmetrized_product(const std::vector<ComplexMatrix>& mats,
                                         std::size_t max_factors = 7) {
  if (mats.empty())
    throw std::invalid_argument("symmetrized_product: empty factor list");
  if (mats.size() > max_factors)
    throw std::length_error("symmetrized_product: factor count exceeds cap");
  const Eigen::Index d = mats.front().rows();
  for (const auto& m : mats) {
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument(
          "symmetrized_product: factors must be square with equal dimension");
    if (!all_finite(m))
      throw std::invalid_argument("symmetrized_product: entries must be finite");
  }

  std::vector<ComplexMatrix> sorted = mats;
  std::sort(sorted.begin(), sorted.end(), detail::matrix_lexicographic_less);

  std::vector<int> order(sorted.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);

  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  do {
    ComplexMatrix prod = sorted[static_cast<std::size_t>(order[0])];
    for (std::size_t i = 1; i < order.size(); ++i)
      prod = prod * sorted[static_cast<std::size_t>(order[i])];
    acc += prod;
  } while (std::next_permutation(order.begin(), order.end()));
  return acc / static_cast<double>(factorial_u64(static_cast<int>(mats.size())));
}

/// Which target the symmetrized k-fold products are compared against.
///   delta:    A-form, delta^{i1...ik} = 1 iff all indices equal.
///   g_metric: beta-form, +1 all-zero, -1 all-equal-nonzero, 0 otherwise.
enum class CliffordForm { delta, g_metric };

/// weighted: one pass over all 4^k ordered words with shared prefix
///   products, averaged per index multiset (identical to the permutation
///   average since every permutation of a given word has the same content).
/// raw: the k!-term definition per multiset; the cross-check oracle,
///   practical for k <= 4.
enum class EnumerationMode { weighted, raw };

inline double clifford_target(CliffordForm form, const std::vector<int>& idx) {
  const bool all_equal =
      std::all_of(idx.begin(), idx.end(), [&](int i) { return i == idx[0]; });
  if (!all_equal) return 0.0;
  if (form == CliffordForm::delta) return 1.0;
  return idx[0] == 0 ? 1.0 : -1.0;
}

/// Nondecreasing index tuples over {0,1,2,3}^k: one representative per
/// multiset, in lexicographic order.
inline std::vector<std::vector<int>> index_multisets(int k, int nvals = 4) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == nvals - 1) --pos;
    if (pos < 0) break;
    const int v = cur[pos] + 1;
    for (int i = pos; i < k; ++i) cur[i] = v;
  }
  return out;
}

inline std::string tuple_label(const std::vector<int>& idx) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ',';
    os << idx[i];
  }
  os << ')';
  return os.str();
}

namespace detail {

/// Accumulates the sum of ordered products over all words of length k,
/// bucketed by word content. Shares prefix products along the 4-ary tree.
inline void accumulate_words(const std::array<ComplexMatrix, 4>& mats, int k,
                             int depth, std::vector<int>& word,
                             const ComplexMatrix& prefix,
                             std::map<std::vector<int>, ComplexMatrix>& sums) {
  if (depth == k) {
    std::vector<int> key = word;
    std::sort(key.begin(), key.end());
    auto it = sums.find(key);
    if (it == sums.end())
      sums.emplace(std::move(key), prefix);
    else
      it->second += prefix;
    return;
  }
  for (int mu = 0; mu < 4; ++mu) {
    word.push_back(mu);
    accumulate_words(mats, k, depth + 1, word, ComplexMatrix(prefix * mats[mu]),
                     sums);
    word.pop_back();
  }
}

inline std::uint64_t word_count(const std::vector<int>& multiset) {
  std::array<int, 4> counts{0, 0, 0, 0};
  for (int i : multiset) counts[static_cast<std::size_t>(i)]++;
  std::uint64_t denom = 1;
  for (int c : counts) denom *= factorial_u64(c);
  return factorial_u64(static_cast<int>(multiset.size())) / denom;
}

}  // namespace detail

/// Checks the defining relation of the representation: for every index
/// multiset {mu_1..mu_k}, the symmetrized product of the chosen matrices
/// equals target * I. Residuals are entrywise max-magnitude.
inline VerificationReport verify_generalized_clifford(
    const BetaRep& rep, CliffordForm form, double tol,
    EnumerationMode mode = EnumerationMode::weighted) {
  const auto& mats = (form == CliffordForm::delta) ? rep.a : rep.beta;
  const int k = rep.k;
  const Eigen::Index d = rep.dim();
  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);

  VerificationReport report("generalized_clifford_relation", tol);
  report.add_param("k", k);
  report.add_param("form", form == CliffordForm::delta ? "delta" : "g_metric");
  report.add_param("mode",
                   mode == EnumerationMode::weighted ? "weighted" : "raw");

  const auto multisets = index_multisets(k);

  if (mode == EnumerationMode::weighted) {
    std::map<std::vector<int>, ComplexMatrix> sums;
    std::vector<int> word;
    detail::accumulate_words(mats, k, 0, word, eye, sums);
    for (const auto& idx : multisets) {
      const ComplexMatrix sym =
          sums.at(idx) / static_cast<double>(detail::word_count(idx));
      const double target = clifford_target(form, idx);
      report.add_case(tuple_label(idx), max_abs(ComplexMatrix(sym - target * eye)));
    }
  } else {
    for (const auto& idx : multisets) {
      std::vector<ComplexMatrix> factors;
      factors.reserve(idx.size());
      for (int mu : idx) factors.push_back(mats[static_cast<std::size_t>(mu)]);
      const ComplexMatrix sym = symmetrized_product(factors);
      const double target = clifford_target(form, idx);
      report.add_case(tuple_label(idx), max_abs(ComplexMatrix(sym - target * eye)));
    }
  }
  return report;
}

/// Checks (sum_mu A^mu x_mu)^k = (sum_mu x_mu^k) I and
/// (sum_mu beta^mu x_mu)^k = (x_0^k - x_1^k - x_2^k - x_3^k) I on seeded
/// random complex four-vectors, with residuals scaled by (sum |x_mu|)^k.
inline VerificationReport verify_power_identity(const BetaRep& rep, int trials,
                                                std::uint64_t seed, double tol) {
  if (trials < 1)
    throw std::invalid_argument("verify_power_identity: trials must be >= 1");
  VerificationReport report("linearization_power_identity", tol);
  report.add_param("k", rep.k);
  report.add_param("trials", trials);
  report.add_param("seed", static_cast<long long>(seed));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  const Eigen::Index d = rep.dim();
  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);

  for (int t = 0; t < trials; ++t) {
    std::array<Complex, 4> x;
    double abs_sum = 0.0;
    for (auto& v : x) {
      v = Complex(dist(rng), dist(rng));
      abs_sum += std::abs(v);
    }
    double scale = 1.0;
    std::array<Complex, 4> xk;
    xk.fill(Complex(1.0, 0.0));
    for (int i = 0; i < rep.k; ++i) {
      scale *= abs_sum;
      for (int mu = 0; mu < 4; ++mu) xk[mu] *= x[mu];
    }

    ComplexMatrix sum_a = ComplexMatrix::Zero(d, d);
    ComplexMatrix sum_b = ComplexMatrix::Zero(d, d);
    for (int mu = 0; mu < 4; ++mu) {
      sum_a += x[mu] * rep.a[mu];
      sum_b += x[mu] * rep.beta[mu];
    }
    const Complex target_a = xk[0] + xk[1] + xk[2] + xk[3];
    const Complex target_b = xk[0] - xk[1] - xk[2] - xk[3];

    const double res_a =
        max_abs(ComplexMatrix(matrix_power(sum_a, rep.k) - target_a * eye)) / scale;
    const double res_b =
        max_abs(ComplexMatrix(matrix_power(sum_b, rep.k) - target_b * eye)) / scale;
    report.add_case("trial " + std::to_string(t) + " A-form", res_a);
    report.add_case("trial " + std::to_string(t) + " beta-form", res_b);
  }
  return report;
}

/// (sigma^j)^dagger = (sigma^j)^{k-1} for j = 1,2,3.
inline VerificationReport verify_pauli_adjoint(int k, double tol) {
  const PauliSet p = build_pauli(k);
  VerificationReport report("pauli_adjoint_power", tol);
  report.add_param("k", k);
  for (int j = 1; j <= 3; ++j) {
    const ComplexMatrix& s = p.sigma(j);
    report.add_case("sigma" + std::to_string(j),
                    max_abs_diff(s.adjoint(), matrix_power(s, k - 1)));
  }
  return report;
}

/// (beta^0)^dagger = (beta^0)^{k-1}, (beta^j)^dagger = -(beta^j)^{k-1},
/// and beta^mu (beta^mu)^dagger = I for every mu.
inline VerificationReport verify_beta_adjoint_unitarity(int k, double tol) {
  const BetaRep rep = build_beta(k);
  const ComplexMatrix eye = ComplexMatrix::Identity(rep.dim(), rep.dim());
  VerificationReport report("beta_adjoint_unitarity", tol);
  report.add_param("k", k);
  report.add_case("beta0 adjoint",
                  max_abs_diff(rep.beta[0].adjoint(),
                               matrix_power(rep.beta[0], k - 1)));
  for (int j = 1; j <= 3; ++j)
    report.add_case(
        "beta" + std::to_string(j) + " adjoint",
        max_abs(ComplexMatrix(rep.beta[j].adjoint() +
                              matrix_power(rep.beta[j], k - 1))));
  for (int mu = 0; mu < 4; ++mu)
    report.add_case(
        "beta" + std::to_string(mu) + " unitary",
        max_abs(ComplexMatrix(rep.beta[mu] * rep.beta[mu].adjoint() - eye)));
  return report;
}

}  // namespace fracdirac
