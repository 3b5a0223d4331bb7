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
#include "isi/coefficients.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "isi/errors.hpp"
#include "isi/legendre.hpp"

namespace isi {
namespace {

// Independent nested integration straight from the definition, innermost
// variable first, with the (-1)^{sum l} sign.
Rational brute_force(const KernelSpec& spec, const MultiIndex& j) {
  RatPoly f = RatPoly::constant(1);
  for (unsigned r = 0; r < spec.k(); ++r) {
    const RatPoly g = f * RatPoly::one_plus_x_pow(spec.weights[r]) *
                      legendre_poly(j[r]);
    const RatPoly a = antiderivative(g);
    f = a - RatPoly::constant(a(-1));
  }
  Rational v = f(1);
  if (spec.weight_sum() % 2) v = -v;
  return v;
}

TEST(KernelSpec, Validation) {
  EXPECT_THROW(KernelSpec{}.validate(), std::invalid_argument);
  EXPECT_THROW(KernelSpec::unweighted(6).validate(), std::invalid_argument);
  EXPECT_NO_THROW(KernelSpec::unweighted(5).validate());
  EXPECT_EQ((KernelSpec{{0, 1, 2}}).label(), "0,1,2");
  EXPECT_EQ((KernelSpec{{0, 1, 2}}).weight_sum(), 3u);
}

TEST(BarCoeff, LabelOrderIsOutermostFirst) {
  // Published cell (0, 0, 1) read outermost first is -2/3.
  EXPECT_EQ(bar_coeff(KernelSpec::unweighted(3), {1, 0, 0}), make_rational(-2, 3));
  EXPECT_EQ(bar_coeff(KernelSpec::unweighted(3), {0, 0, 0}), make_rational(4, 3));
}

TEST(BarCoeff, SingleIntegral) {
  const CoeffTensor t = coeff_tensor(KernelSpec::unweighted(1), 2);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t.at({0}), 2);
  EXPECT_EQ(t.at({1}), 0);
  EXPECT_EQ(t.at({2}), 0);
}

TEST(BarCoeff, DoubleIntegralIsBanded) {
  const CoeffTensor t = coeff_tensor(KernelSpec::unweighted(2), 6);
  for (unsigned a = 0; a <= 6; ++a) {
    for (unsigned b = 0; b <= 6; ++b) {
      const bool allowed = (a == 0 && b == 0) || a + 1 == b || b + 1 == a;
      if (!allowed) EXPECT_EQ(t.at({a, b}), 0) << a << "," << b;
    }
  }
  EXPECT_EQ(t.at({0, 0}), 2);
}

TEST(BarCoeff, MatchesBruteForce) {
  std::mt19937 rng(7);
  for (unsigned trial = 0; trial < 60; ++trial) {
    const unsigned k = 1 + rng() % 3;
    KernelSpec spec;
    MultiIndex j;
    for (unsigned r = 0; r < k; ++r) {
      spec.weights.push_back(rng() % 3);
      j.push_back(rng() % 5);
    }
    EXPECT_EQ(bar_coeff(spec, j), brute_force(spec, j))
        << spec.label() << " trial " << trial;
  }
}

TEST(BarCoeff, UnsignedConventionDropsSign) {
  const KernelSpec spec{{1, 0, 0}};
  EXPECT_EQ(bar_coeff(spec, {0, 1, 2}, Convention::kUnsigned),
            -bar_coeff(spec, {0, 1, 2}, Convention::kSigned));
  const KernelSpec even{{1, 1}};
  EXPECT_EQ(bar_coeff(even, {2, 1}, Convention::kUnsigned),
            bar_coeff(even, {2, 1}, Convention::kSigned));
}

TEST(CoeffTensor, AgreesWithPointwiseCoefficients) {
  const KernelSpec spec{{0, 1, 0}};
  const CoeffTensor t = coeff_tensor(spec, 3);
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(t.at_linear(i), bar_coeff(spec, t.multi_index(i)));
    EXPECT_EQ(t.linear_index(t.multi_index(i)), i);
  }
}

TEST(CoeffTensor, ThreadCountDoesNotChangeValues) {
  TensorOptions one;
  TensorOptions many;
  many.threads = 4;
  const KernelSpec spec = KernelSpec::unweighted(4);
  EXPECT_EQ(coeff_tensor(spec, 3, one).values(), coeff_tensor(spec, 3, many).values());
}

TEST(CoeffTensor, SizeCapRaisesResourceLimit) {
  TensorOptions small;
  small.max_entries = 100;
  EXPECT_THROW(coeff_tensor(KernelSpec::unweighted(3), 4, small), ResourceLimitError);
  EXPECT_NO_THROW(coeff_tensor(KernelSpec::unweighted(2), 9, small));
}

TEST(ScaleCoeff, SingleIntegralIsSqrtDt) {
  const double dt = 0.37;
  EXPECT_NEAR(scale_coeff(2, KernelSpec::unweighted(1), {0}, dt), std::sqrt(dt), 1e-15);
  // Double integral (0, 0) coefficient is dt / 2.
  EXPECT_NEAR(scale_coeff(2, KernelSpec::unweighted(2), {0, 0}, dt), dt / 2, 1e-15);
}

TEST(ScaleCoeff, TensorScalingMatchesPointwise) {
  const KernelSpec spec{{1, 0}};
  const CoeffTensor t = coeff_tensor(spec, 3);
  const ScaledTensor s = scale(t, 0.25);
  EXPECT_EQ(s.extent(), 4u);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const MultiIndex j = t.multi_index(i);
    EXPECT_DOUBLE_EQ(s.at(j), scale_coeff(t.at_linear(i), spec, j, 0.25));
  }
}

}  // namespace
}  // namespace isi
