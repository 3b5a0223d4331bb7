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
// Randomized checks of exact algebraic identities. Every comparison is
// between rationals, so any failure is a genuine defect.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "isi/coefficients.hpp"
#include "isi/legendre.hpp"
#include "isi/polynomial.hpp"

namespace isi {
namespace {

RatPoly random_poly(std::mt19937& gen, unsigned degree) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Rational> c;
  for (unsigned i = 0; i <= degree; ++i) c.push_back(make_rational(num(gen), den(gen)));
  return RatPoly(std::move(c));
}

TEST(AlgebraProperties, LegendreOrthogonality) {
  std::mt19937 gen(1);
  std::uniform_int_distribution<unsigned> deg(0, 24);
  const auto polys = legendre_polys(24);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned m = deg(gen), n = deg(gen);
    const Rational ip = definite_integral(polys[m] * polys[n], -1, 1);
    EXPECT_EQ(ip, m == n ? make_rational(2, 2 * n + 1) : Rational(0)) << m << "," << n;
  }
}

TEST(AlgebraProperties, ProductLinearization) {
  std::mt19937 gen(2);
  std::uniform_int_distribution<unsigned> deg(0, 14);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned m = deg(gen), n = deg(gen);
    RatPoly sum;
    for (const auto& [d, c] : product_expand(m, n)) sum += c * legendre_poly(d);
    EXPECT_EQ(sum, legendre_poly(m) * legendre_poly(n)) << m << "," << n;
  }
}

TEST(AlgebraProperties, BasisChangeRoundTrip) {
  std::mt19937 gen(3);
  std::uniform_int_distribution<unsigned> deg(0, 16);
  for (int trial = 0; trial < 100; ++trial) {
    const RatPoly p = random_poly(gen, deg(gen));
    const auto c = to_legendre_basis(p);
    RatPoly back;
    for (std::size_t j = 0; j < c.size(); ++j) back += c[j] * legendre_poly(j);
    EXPECT_EQ(back, p);
  }
}

TEST(AlgebraProperties, AntiderivativeInvertsDerivative) {
  std::mt19937 gen(4);
  for (int trial = 0; trial < 50; ++trial) {
    const RatPoly p = random_poly(gen, trial % 12);
    EXPECT_EQ(derivative(antiderivative(p)), p);
  }
}

// Summing an unweighted iterated integral over every ordering of its
// indices gives the product of single integrals, which vanishes unless all
// indices are zero.
TEST(AlgebraProperties, PermutationSumsTile) {
  for (unsigned k = 2; k <= 3; ++k) {
    for (unsigned q = 0; q <= 4; ++q) {
      const CoeffTensor t = coeff_tensor(KernelSpec::unweighted(k), q);
      Rational factorial = 1;
      for (unsigned r = 2; r <= k; ++r) factorial *= r;
      const Rational origin = factorial * t.at(MultiIndex(k, 0));
      for (std::size_t i = 0; i < t.size(); ++i) {
        MultiIndex j = t.multi_index(i);
        const bool zero = std::all_of(j.begin(), j.end(), [](unsigned x) { return x == 0; });
        std::vector<unsigned> perm(k);
        std::iota(perm.begin(), perm.end(), 0u);
        Rational sum = 0;
        do {
          MultiIndex s(k);
          for (unsigned r = 0; r < k; ++r) s[r] = j[perm[r]];
          sum += t.at(s);
        } while (std::next_permutation(perm.begin(), perm.end()));
        EXPECT_EQ(sum, zero ? origin : Rational(0)) << "k=" << k << " q=" << q;
      }
    }
  }
}

// Extending the truncation order leaves earlier coefficients unchanged.
TEST(AlgebraProperties, TensorsAreNested) {
  for (const KernelSpec& spec : {KernelSpec{{1, 0}}, KernelSpec{{0, 1, 0}}}) {
    const CoeffTensor small = coeff_tensor(spec, 2);
    const CoeffTensor big = coeff_tensor(spec, 4);
    for (std::size_t i = 0; i < small.size(); ++i) {
      EXPECT_EQ(small.at_linear(i), big.at(small.multi_index(i)));
    }
  }
}

}  // namespace
}  // namespace isi
