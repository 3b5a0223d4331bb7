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
#include "isi/mc_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "isi/error.hpp"
#include "isi/errors.hpp"

namespace isi {
namespace {

double sum_component(const std::vector<double>& dw, unsigned m, unsigned i) {
  double s = 0;
  for (std::size_t n = i - 1; n < dw.size(); n += m) s += dw[n];
  return s;
}

TEST(Increments, DeterministicAndIndependentOfPathOrder) {
  const auto a = wiener_increments(7, 3, 64, 2, 0.5);
  const auto b = wiener_increments(7, 3, 64, 2, 0.5);
  const auto c = wiener_increments(7, 4, 64, 2, 0.5);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  ASSERT_EQ(a.size(), 128u);
}

TEST(Increments, VarianceMatchesStepLength) {
  double ss = 0;
  std::size_t count = 0;
  for (std::uint64_t p = 0; p < 200; ++p) {
    for (double x : wiener_increments(1, p, 128, 1, 0.5)) {
      ss += x * x;
      ++count;
    }
  }
  const double var = ss / count;
  const double h = 0.5 / 128;
  EXPECT_NEAR(var / h, 1.0, 0.03);
}

TEST(Increments, CoarsenSumsPairs) {
  const auto fine = wiener_increments(1, 0, 8, 2, 1.0);
  const auto coarse = coarsen(fine, 2);
  ASSERT_EQ(coarse.size(), 8u);
  EXPECT_DOUBLE_EQ(coarse[0], fine[0] + fine[2]);
  EXPECT_DOUBLE_EQ(coarse[1], fine[1] + fine[3]);
  EXPECT_DOUBLE_EQ(coarse[6], fine[12] + fine[14]);
}

TEST(GridIntegral, SingleIsTheSumOfIncrements) {
  const auto dw = wiener_increments(3, 0, 256, 2, 0.5);
  const double v = iterated_on_grid(KernelSpec::unweighted(1), IndexPattern{{2}}, dw, 2,
                                    0.5, Calculus::kIto);
  EXPECT_NEAR(v, sum_component(dw, 2, 2), 1e-13);
}

TEST(GridIntegral, EqualDoubleHasClosedForm) {
  const double dt = 0.5;
  const auto dw = wiener_increments(5, 1, 512, 1, dt);
  const double w = sum_component(dw, 1, 1);
  const IndexPattern p{{1, 1}};
  const double strat =
      iterated_on_grid(KernelSpec::unweighted(2), p, dw, 1, dt, Calculus::kStratonovich);
  const double ito = iterated_on_grid(KernelSpec::unweighted(2), p, dw, 1, dt, Calculus::kIto);
  EXPECT_NEAR(strat, w * w / 2, 1e-12);
  EXPECT_NEAR(strat - ito, dt / 2, 1e-12);
}

TEST(GridIntegral, DistinctDoublesSumToProduct) {
  const double dt = 0.5;
  const auto dw = wiener_increments(9, 0, 512, 2, dt);
  const auto spec = KernelSpec::unweighted(2);
  const double a = iterated_on_grid(spec, IndexPattern{{1, 2}}, dw, 2, dt, Calculus::kIto);
  const double b = iterated_on_grid(spec, IndexPattern{{2, 1}}, dw, 2, dt, Calculus::kIto);
  EXPECT_NEAR(a + b, sum_component(dw, 2, 1) * sum_component(dw, 2, 2), 1e-12);
}

TEST(GridIntegral, SecondMomentsMatchKernelNorms) {
  SimConfig cfg;
  cfg.steps = 256;
  cfg.paths = 4000;
  cfg.dt = 0.5;
  for (const auto& [spec, pattern] :
       std::vector<std::pair<KernelSpec, IndexPattern>>{
           {KernelSpec::unweighted(2), IndexPattern{{1, 2}}},
           {KernelSpec{{1, 0}}, IndexPattern{{1, 2}}},
           {KernelSpec::unweighted(3), IndexPattern{{1, 2, 3}}}}) {
    const auto m = estimate_moments(simulate_iterated(spec, pattern, cfg));
    const double expected = to_double(kernel_norm_unit(spec)) *
                            std::pow(cfg.dt, spec.k() + 2.0 * std::accumulate(
                                                          spec.weights.begin(),
                                                          spec.weights.end(), 0u));
    EXPECT_NEAR(m.mean, 0, 5 * m.mean_se) << spec.label();
    EXPECT_NEAR(m.second_moment, expected, 5 * m.second_moment_se) << spec.label();
  }
}

TEST(Projector, ProjectionsAreStandardNormal) {
  const unsigned steps = 256;
  const double dt = 0.5;
  LegendreProjector proj(steps, 3, dt);
  const unsigned paths = 3000;
  std::vector<double> z0, z2, z3;
  double cross = 0;
  for (unsigned p = 0; p < paths; ++p) {
    const auto dw = wiener_increments(11, p, steps, 1, dt);
    const NoiseDraws d = proj.project(dw, 1);
    z0.push_back(d.zeta(1, 0));
    z2.push_back(d.zeta(1, 2));
    cross += d.zeta(1, 0) * d.zeta(1, 3);
    EXPECT_NEAR(d.zeta(1, 0), sum_component(dw, 1, 1) / std::sqrt(dt), 1e-12);
  }
  EXPECT_NEAR(estimate_moments(z0).second_moment, 1.0, 0.1);
  EXPECT_NEAR(estimate_moments(z2).second_moment, 1.0, 0.1);
  EXPECT_NEAR(cross / paths, 0.0, 0.1);
}

TEST(Moments, StandardErrors) {
  const auto m = estimate_moments({1.0, -1.0, 1.0, -1.0});
  EXPECT_DOUBLE_EQ(m.mean, 0.0);
  EXPECT_DOUBLE_EQ(m.second_moment, 1.0);
  EXPECT_DOUBLE_EQ(m.second_moment_se, 0.0);
}

TEST(Config, Validation) {
  SimConfig cfg;
  cfg.steps = 3;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.steps = 8;
  cfg.paths = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.paths = 1;
  cfg.dt = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Validation, SmallRunAgreesAndIsReproducible) {
  SimConfig cfg;
  cfg.steps = 512;
  cfg.max_steps = 2048;
  cfg.paths = 2000;
  for (const ValidationCase& c : default_cases()) {
    if (c.name != "double-distinct") continue;
    const ValidationReport a = validate_expansion(c, cfg);
    const ValidationReport b = validate_expansion(c, cfg);
    EXPECT_EQ(a.empirical, b.empirical);
    EXPECT_LT(std::abs(a.z), 4.0);
    EXPECT_GT(a.theoretical, 0);
    EXPECT_EQ(a.paths, cfg.paths);
  }
}

TEST(Validation, GridCapRaisesResourceLimit) {
  SimConfig cfg;
  cfg.steps = 4;
  cfg.max_steps = 4;
  cfg.paths = 2000;
  const ValidationCase c = default_cases().front();
  EXPECT_THROW(validate_expansion(c, cfg), ResourceLimitError);
}

TEST(Validation, JsonReportKeys) {
  ValidationReport r;
  r.name = "x";
  r.q = 2;
  r.dt = 0.5;
  r.steps = 8;
  r.paths = 10;
  const std::string s = report_to_json(r);
  std::size_t pos = 0;
  for (const char* key : {"\"case\"", "\"q\"", "\"dt\"", "\"N\"", "\"P\"", "\"empirical\"",
                          "\"theoretical\"", "\"z\""}) {
    const std::size_t at = s.find(key);
    ASSERT_NE(at, std::string::npos) << key;
    EXPECT_GE(at, pos) << key;
    pos = at;
  }
}

}  // namespace
}  // namespace isi
