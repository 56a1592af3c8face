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

#include "pwtame/tree/monomial_basis.h"

#include <algorithm>
#include <functional>

#include "absl/strings/str_cat.h"

namespace pwtame::tree {

MonomialBasis::MonomialBasis(int dimension, int degree)
    : dimension_(dimension), degree_(degree) {
  std::vector<int> e(dimension, 0);
  // Within one total degree, emit exponents lexicographically descending by
  // giving the first variable as much of the remaining degree as possible.
  std::function<void(int, int)> fill = [&](int j, int remaining) {
    if (j == dimension_ - 1) {
      e[j] = remaining;
      exponents_.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[j] = k;
      fill(j + 1, remaining - k);
    }
    e[j] = 0;
  };
  for (int total = 0; total <= degree_; ++total) fill(0, total);
}

long long MonomialBasis::Count(int dimension, int degree) {
  // C(r + d, d) computed incrementally; exact for the sizes used here.
  long long c = 1;
  for (int i = 1; i <= dimension; ++i) c = c * (degree + i) / i;
  return c;
}

void MonomialBasis::Evaluate(std::span<const double> x,
                             std::span<double> out) const {
  for (size_t k = 0; k < exponents_.size(); ++k) {
    double v = 1.0;
    for (int j = 0; j < dimension_; ++j) {
      for (int p = 0; p < exponents_[k][j]; ++p) v *= x[j];
    }
    out[k] = v;
  }
}

std::vector<double> MonomialBasis::Evaluate(std::span<const double> x) const {
  std::vector<double> out(exponents_.size());
  Evaluate(x, out);
  return out;
}

std::string MonomialBasis::MonomialName(int k) const {
  std::string name;
  for (int j = 0; j < dimension_; ++j) {
    const int p = exponents_[k][j];
    if (p == 0) continue;
    if (!name.empty()) name += "*";
    absl::StrAppend(&name, "x", j + 1);
    if (p > 1) absl::StrAppend(&name, "^", p);
  }
  return name.empty() ? "1" : name;
}

absl::StatusOr<double> EvalPoly(std::span<const double> coeffs,
                                const MonomialBasis& basis,
                                std::span<const double> x) {
  if (static_cast<int>(coeffs.size()) != basis.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("polynomial has ", coeffs.size(),
                     " coefficients but the basis has ", basis.size()));
  }
  if (static_cast<int>(x.size()) != basis.dimension()) {
    return absl::InvalidArgumentError(
        absl::StrCat("point has dimension ", x.size(), ", basis expects ",
                     basis.dimension()));
  }
  double sum = 0.0;
  for (int k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0.0) continue;
    double v = coeffs[k];
    auto e = basis.exponent(k);
    for (int j = 0; j < basis.dimension(); ++j) {
      for (int p = 0; p < e[j]; ++p) v *= x[j];
    }
    sum += v;
  }
  return sum;
}

}  // namespace pwtame::tree
