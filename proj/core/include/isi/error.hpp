// Copyright 2026 The isi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact mean-square truncation errors.
//
// For a truncated expansion over an index set S the error is
//
//   E = I - sum_{j in S} C_j * sum_{s in G} C_{s(j)}
//
// where I is the squared kernel norm and G the position permutations that
// preserve the equality pattern. The "unit" variants divide out
// dt^{2 sum l + k}, which every term shares, and are exact rationals.

#ifndef ISI_ERROR_HPP_
#define ISI_ERROR_HPP_

#include <optional>
#include <vector>

#include "isi/coefficients.hpp"
#include "isi/pattern.hpp"

namespace isi {

// 1 / prod_r (2 (l_1 + ... + l_r) + r).
Rational kernel_norm_unit(const KernelSpec& spec);
// The same quantity by exact nested integration of the squared kernel.
Rational kernel_norm_by_integration(const KernelSpec& spec);
double kernel_norm(const KernelSpec& spec, double dt);

// Error of the cube truncation {0..q}^k with q = tensor.q().
Rational exact_error_unit(const CoeffTensor& tensor,
                          const EqualityPattern& pattern);
// Error over an explicit index set inside the tensor. Permuted indices must
// also lie inside the tensor, which holds whenever the set does.
Rational exact_error_unit_over(const CoeffTensor& tensor,
                               const EqualityPattern& pattern,
                               const std::vector<MultiIndex>& index_set);
double exact_error(const CoeffTensor& tensor, const EqualityPattern& pattern,
                   double dt);

// Floating-point variant for coefficient tables without an exact form (the
// trigonometric system). The cube is {0..extent-1}^k.
double exact_error(const ScaledTensor& tensor, const EqualityPattern& pattern,
                   const Rational& kernel_norm_unit_value);

// Double-integral index set of the printed weighted series at truncation q:
// (i, i) and (i, i+2), (i+2, i) for i <= q, and (i-1, i), (i, i-1) for
// 1 <= i <= max(q, 1). Reaches index q + 2.
std::vector<MultiIndex> band_support(unsigned q);

// k! (I - sum C^2), divided by dt^{2 sum l + k}.
Rational error_bound_unit(const CoeffTensor& tensor);
double error_bound(const CoeffTensor& tensor, double dt);

struct ErrorReport {
  double exact = 0;
  double bound = 0;
  double kernel_norm = 0;
  std::optional<double> series;
};

ErrorReport error_report(const CoeffTensor& tensor,
                         const EqualityPattern& pattern, double dt);

}  // namespace isi

#endif  // ISI_ERROR_HPP_
