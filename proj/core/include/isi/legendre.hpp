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

#ifndef ISI_LEGENDRE_HPP_
#define ISI_LEGENDRE_HPP_

#include <map>
#include <utility>
#include <vector>

#include "isi/polynomial.hpp"
#include "isi/rational.hpp"

namespace isi {

// P_n on [-1, 1], built from the three-term recurrence.
RatPoly legendre_poly(unsigned n);

// P_0..P_n in one pass.
std::vector<RatPoly> legendre_polys(unsigned n);

// a_k = (2k-1)!! / k!, with (-1)!! = 1.
Rational legendre_product_weight(unsigned k);

// Linearization P_m P_n = sum_k K_{m,n,k} P_{n+m-2k}, returned as
// (degree, coefficient) pairs in order of decreasing degree. Arguments may be
// given in either order.
std::vector<std::pair<unsigned, Rational>> product_expand(unsigned m,
                                                          unsigned n);

// Coefficients c_j with p = sum_j c_j P_j. Exact. The second form reuses a
// precomputed basis, which must reach degree(p).
std::vector<Rational> to_legendre_basis(const RatPoly& p);
std::vector<Rational> to_legendre_basis(const RatPoly& p,
                                        const std::vector<RatPoly>& basis);

// Read-only store of P_0..P_n plus a memo of product coefficients. Immutable
// once built, so it can be shared across threads.
class LegendreCache {
 public:
  explicit LegendreCache(unsigned max_degree);

  unsigned max_degree() const {
    return static_cast<unsigned>(polys_.size()) - 1;
  }
  const RatPoly& poly(unsigned j) const { return polys_.at(j); }
  // K_{m,n,k} for m <= n, both within the cached degree range.
  const Rational& product_coeff(unsigned m, unsigned n, unsigned k) const;

 private:
  std::vector<RatPoly> polys_;
  std::map<std::pair<unsigned, unsigned>, std::vector<Rational>> products_;
};

}  // namespace isi

#endif  // ISI_LEGENDRE_HPP_
