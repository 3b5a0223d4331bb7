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

#include "isi/legendre.hpp"

#include <stdexcept>
#include <utility>

namespace isi {
namespace {

std::vector<RatPoly> legendre_sequence(unsigned n) {
  std::vector<RatPoly> p;
  p.reserve(n + 1);
  p.push_back(RatPoly::constant(1));
  if (n >= 1) p.push_back(RatPoly::monomial(1, 1));
  const RatPoly x = RatPoly::monomial(1, 1);
  for (unsigned j = 1; j < n; ++j) {
    RatPoly next = x * p[j] * Rational(2 * j + 1) - p[j - 1] * Rational(j);
    next *= make_rational(1, j + 1);
    p.push_back(std::move(next));
  }
  return p;
}

std::vector<Rational> product_row(unsigned m, unsigned n) {
  std::vector<Rational> row;
  row.reserve(m + 1);
  for (unsigned k = 0; k <= m; ++k) {
    Rational v = legendre_product_weight(m - k) * legendre_product_weight(k) *
                 legendre_product_weight(n - k) /
                 legendre_product_weight(m + n - k);
    v *= make_rational(2 * n + 2 * m - 4 * k + 1, 2 * n + 2 * m - 2 * k + 1);
    row.push_back(std::move(v));
  }
  return row;
}

}  // namespace

RatPoly legendre_poly(unsigned n) { return legendre_sequence(n).back(); }

std::vector<RatPoly> legendre_polys(unsigned n) { return legendre_sequence(n); }

Rational legendre_product_weight(unsigned k) {
  BigInt odd_fact = 1;  // (2k-1)!!
  BigInt fact = 1;      // k!
  for (unsigned i = 1; i <= k; ++i) {
    odd_fact *= 2 * i - 1;
    fact *= i;
  }
  Rational r(odd_fact, fact);
  r.canonicalize();
  return r;
}

std::vector<std::pair<unsigned, Rational>> product_expand(unsigned m,
                                                          unsigned n) {
  if (m > n) std::swap(m, n);
  auto row = product_row(m, n);
  std::vector<std::pair<unsigned, Rational>> out;
  out.reserve(row.size());
  for (unsigned k = 0; k <= m; ++k) {
    out.emplace_back(n + m - 2 * k, std::move(row[k]));
  }
  return out;
}

std::vector<Rational> to_legendre_basis(const RatPoly& p) {
  if (p.is_zero()) return {};
  return to_legendre_basis(
      p, legendre_sequence(static_cast<unsigned>(p.degree())));
}

std::vector<Rational> to_legendre_basis(const RatPoly& p,
                                        const std::vector<RatPoly>& basis) {
  if (p.is_zero()) return {};
  if (basis.size() <= static_cast<std::size_t>(p.degree())) {
    throw std::invalid_argument("Legendre basis shorter than polynomial");
  }
  std::vector<Rational> c(static_cast<std::size_t>(p.degree()) + 1);
  RatPoly rest = p;
  while (!rest.is_zero()) {
    const auto d = static_cast<unsigned>(rest.degree());
    c[d] = rest.coeffs().back() / basis[d].coeffs().back();
    rest -= basis[d] * c[d];
  }
  return c;
}

LegendreCache::LegendreCache(unsigned max_degree)
    : polys_(legendre_sequence(max_degree)) {
  for (unsigned n = 0; n <= max_degree; ++n) {
    for (unsigned m = 0; m <= n; ++m) products_[{m, n}] = product_row(m, n);
  }
}

const Rational& LegendreCache::product_coeff(unsigned m, unsigned n,
                                             unsigned k) const {
  if (m > n) std::swap(m, n);
  const auto it = products_.find({m, n});
  if (it == products_.end() || k > m) {
    throw std::out_of_range("product coefficient outside cached range");
  }
  return it->second[k];
}

}  // namespace isi
