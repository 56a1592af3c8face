// Copyright 2026 The pwtame Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PWTAME_TREE_MONOMIAL_BASIS_H_
#define PWTAME_TREE_MONOMIAL_BASIS_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace pwtame::tree {

// All monomials x^e with |e| <= r in d variables, in graded-lexicographic
// order: by total degree, then lexicographically descending on the exponent
// vector (x1^2, x1 x2, x2^2). The constant monomial comes first. This order is
// the coefficient layout of every leaf polynomial in models and MIP files.
class MonomialBasis {
 public:
  MonomialBasis(int dimension, int degree);

  int dimension() const { return dimension_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(exponents_.size()); }
  std::span<const int> exponent(int k) const { return exponents_[k]; }

  // Values of every monomial at x.
  std::vector<double> Evaluate(std::span<const double> x) const;
  void Evaluate(std::span<const double> x, std::span<double> out) const;

  // Human-readable monomial, e.g. "x1^2*x2" or "1".
  std::string MonomialName(int k) const;

  // C(r + d, d).
  static long long Count(int dimension, int degree);

 private:
  int dimension_;
  int degree_;
  std::vector<std::vector<int>> exponents_;
};

// sum_k c_k * x^(e_k). Fails when c does not match the basis size.
absl::StatusOr<double> EvalPoly(std::span<const double> coeffs,
                                const MonomialBasis& basis,
                                std::span<const double> x);

}  // namespace pwtame::tree

#endif  // PWTAME_TREE_MONOMIAL_BASIS_H_
