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

#include <gtest/gtest.h>

namespace isi {
namespace {

// Rodrigues' formula: P_n = 1/(2^n n!) d^n/dx^n (x^2 - 1)^n.
RatPoly rodrigues(unsigned n) {
  RatPoly base{make_rational(-1), make_rational(0), make_rational(1)};
  RatPoly p = RatPoly::constant(1);
  for (unsigned i = 0; i < n; ++i) p = p * base;
  BigInt scale = 1;
  for (unsigned i = 0; i < n; ++i) {
    p = derivative(p);
    scale *= 2 * (i + 1);
  }
  return p * Rational(BigInt(1), scale);
}

TEST(Legendre, MatchesRodrigues) {
  for (unsigned n = 0; n <= 6; ++n) {
    RatPoly r = rodrigues(n);
    EXPECT_EQ(legendre_poly(n), r) << n;
  }
}

TEST(Legendre, Orthogonality) {
  const auto p = legendre_polys(8);
  for (unsigned i = 0; i <= 8; ++i) {
    for (unsigned j = 0; j <= 8; ++j) {
      const Rational v = definite_integral(p[i] * p[j], -1, 1);
      EXPECT_EQ(v, i == j ? make_rational(2, 2 * j + 1) : Rational(0))
          << i << "," << j;
    }
  }
}

TEST(Legendre, EndpointValues) {
  for (unsigned n = 0; n <= 10; ++n) {
    EXPECT_EQ(legendre_poly(n)(1), 1);
    EXPECT_EQ(legendre_poly(n)(-1), n % 2 ? -1 : 1);
  }
}

TEST(Legendre, ProductExpansionReconstructsProduct) {
  for (unsigned m = 0; m <= 5; ++m) {
    for (unsigned n = 0; n <= 5; ++n) {
      RatPoly sum;
      for (const auto& [k, c] : product_expand(m, n)) sum += legendre_poly(k) * c;
      EXPECT_EQ(sum, legendre_poly(m) * legendre_poly(n)) << m << "," << n;
    }
  }
}

TEST(Legendre, BasisConversionRoundTrip) {
  const RatPoly p{make_rational(3), make_rational(-1, 2), make_rational(0),
                  make_rational(7, 3)};
  const auto c = to_legendre_basis(p);
  RatPoly back;
  for (unsigned j = 0; j < c.size(); ++j) back += legendre_poly(j) * c[j];
  EXPECT_EQ(back, p);
}

TEST(Legendre, CacheAgreesWithDirectExpansion) {
  const LegendreCache cache(6);
  EXPECT_EQ(cache.max_degree(), 6u);
  // Pairs are (degree, coefficient) with degree = m + n - 2k.
  for (const auto& [degree, c] : product_expand(3, 2)) {
    EXPECT_EQ(cache.product_coeff(3, 2, (5 - degree) / 2), c);
  }
  EXPECT_THROW(cache.product_coeff(3, 2, 3), std::out_of_range);
}

}  // namespace
}  // namespace isi
