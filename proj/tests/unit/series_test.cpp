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
#include "isi/series.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace isi {
namespace {

// Reference values from 40-digit evaluation, times each table's factor.
struct Expected {
  unsigned table;
  double values[5];
};

const Expected kReference[] = {
    {1, {0.1666666667, 0.02380952381, 0.002487562189, 2.498750625e-4, 2.499875006e-5}},
    {2, {0.3796825397, 0.05807560579, 0.00620067406, 6.245006861e-4, 6.249500069e-5}},
    {3, {0.006984126984, 4.355113186e-5, 6.007593538e-8, 6.225077901e-11, 6.247500781e-14}},
    {38, {0.04591393598, 0.007249921301, 7.572158851e-4, 7.597281732e-5, 7.598996788e-6}},
    {41, {0.06288415338, 0.009662719804, 0.001009259079, 1.012904549e-4, 1.013189973e-5}},
    {42, {0.05403428038, 0.008150514159, 8.426082141e-4, 8.442891988e-5, 8.443496403e-6}},
};

TEST(Series, NamesRoundTrip) {
  for (SeriesKind k : all_series_kinds()) {
    EXPECT_EQ(parse_series_kind(series_kind_name(k)), k);
  }
  EXPECT_FALSE(parse_series_kind("legendre").has_value());
}

TEST(Series, TablesMatchHighPrecisionReference) {
  for (const auto& e : kReference) {
    const ErrorTable t = error_table(e.table);
    SeriesAccumulator acc(t.kind);
    for (unsigned i = 0; i < 5; ++i) {
      acc.advance_to(t.qs[i]);
      const double v = t.factor * acc.normalized();
      EXPECT_NEAR(v / e.values[i], 1.0, 2e-9) << "table " << e.table << " q=" << t.qs[i];
    }
  }
  EXPECT_THROW(error_table(4), std::out_of_range);
}

TEST(Series, AccumulatorMatchesFreshEvaluation) {
  for (SeriesKind k : all_series_kinds()) {
    SeriesAccumulator acc(k);
    for (unsigned q : {1u, 2u, 7u, 30u}) {
      acc.advance_to(q);
      EXPECT_DOUBLE_EQ(acc.normalized(), series_error_normalized(k, q))
          << series_kind_name(k);
    }
    EXPECT_THROW(acc.advance_to(3), std::invalid_argument);
  }
}

TEST(Series, EmptySumsAreZero) {
  // At q = 1 the sum starting at i = 2 is empty.
  const double v = 16 * series_error_normalized(SeriesKind::kLegendreWeightedDouble, 1);
  EXPECT_NEAR(v, 0.3796825397, 1e-10);
}

TEST(Series, ClosedFormsOfSimpleKinds) {
  for (unsigned q : {1u, 4u, 50u}) {
    EXPECT_NEAR(series_error_normalized(SeriesKind::kLegendreDouble, q),
                1.0 / (4.0 * (2 * q + 1)), 1e-15);
    EXPECT_NEAR(series_error_normalized(SeriesKind::kTrigDoubleUntailed, q),
                3 * series_error_normalized(SeriesKind::kTrigDouble, q), 1e-15);
    EXPECT_DOUBLE_EQ(series_error_normalized(SeriesKind::kTrigSingleWeightedUntailed, q),
                     series_error_normalized(SeriesKind::kTrigDouble, q));
  }
}

TEST(Series, ScalesWithDtPower) {
  EXPECT_DOUBLE_EQ(series_error(SeriesKind::kTrigTriple, 3, 0.5),
                   series_error_normalized(SeriesKind::kTrigTriple, 3) * 0.125);
  EXPECT_EQ(dt_exponent(SeriesKind::kTrigWeightedDouble), 4u);
}

}  // namespace
}  // namespace isi
