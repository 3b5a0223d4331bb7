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

#include <cmath>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace isi {
namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

struct Neumaier {
  double sum = 0;
  double comp = 0;
  void add(double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

Big frac(long long n, long long d) { return Big(n) / Big(d); }

double triple_cross(double r, double l) {
  const double r2 = r * r;
  const double l2 = l * l;
  const double d = r2 - l2;
  return (5 * l2 * l2 + 4 * r2 * r2 - 3 * r2 * l2) / (r2 * l2 * d * d);
}

double weighted_cross(double k, double l) {
  const double k2 = k * k;
  const double l2 = l * l;
  const double d = l2 - k2;
  return (k2 + l2) / (l2 * d * d);
}

bool is_trig(SeriesKind kind) {
  return kind != SeriesKind::kLegendreDouble &&
         kind != SeriesKind::kLegendreWeightedDouble &&
         kind != SeriesKind::kLegendreWeightedDoubleEqual;
}

}  // namespace

struct SeriesAccumulator::State {
  // Legendre single sums, named by their summand.
  Big inv_4i2m1;      // 1/(4i^2-1), i >= 1 (or i >= 2 where printed)
  Big inv_sq_outer;   // 1/((2i-1)^2 (2i+3)^2), i >= 1
  Big band_term;      // ((i+2)^2+(i+1)^2)/((2i+1)(2i+5)(2i+3)^2), i >= 0
  Big inv_band;       // 1/((2i+1)(2i+5)(2i+3)^2), i >= 0
  // Trigonometric sums over r = 1..q.
  Big inv_r2;
  Big inv_r4;
  Neumaier cross;     // sum over r != l of the kind's two-index summand
};

std::vector<SeriesKind> all_series_kinds() {
  return {SeriesKind::kLegendreDouble,
          SeriesKind::kLegendreWeightedDouble,
          SeriesKind::kLegendreWeightedDoubleEqual,
          SeriesKind::kTrigDouble,
          SeriesKind::kTrigDoubleUntailed,
          SeriesKind::kTrigSingleWeightedUntailed,
          SeriesKind::kTrigTriple,
          SeriesKind::kTrigTripleUntailed,
          SeriesKind::kTrigWeightedDouble};
}

std::string series_kind_name(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::kLegendreDouble: return "legendre-double";
    case SeriesKind::kLegendreWeightedDouble: return "legendre-weighted-double";
    case SeriesKind::kLegendreWeightedDoubleEqual:
      return "legendre-weighted-double-equal";
    case SeriesKind::kTrigDouble: return "trig-double";
    case SeriesKind::kTrigDoubleUntailed: return "trig-double-untailed";
    case SeriesKind::kTrigSingleWeightedUntailed:
      return "trig-single-weighted-untailed";
    case SeriesKind::kTrigTriple: return "trig-triple";
    case SeriesKind::kTrigTripleUntailed: return "trig-triple-untailed";
    case SeriesKind::kTrigWeightedDouble: return "trig-weighted-double";
  }
  return "";
}

std::optional<SeriesKind> parse_series_kind(const std::string& name) {
  for (SeriesKind k : all_series_kinds()) {
    if (series_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

unsigned dt_exponent(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::kLegendreDouble:
    case SeriesKind::kTrigDouble:
    case SeriesKind::kTrigDoubleUntailed:
      return 2;
    case SeriesKind::kTrigSingleWeightedUntailed:
    case SeriesKind::kTrigTriple:
    case SeriesKind::kTrigTripleUntailed:
      return 3;
    case SeriesKind::kLegendreWeightedDouble:
    case SeriesKind::kLegendreWeightedDoubleEqual:
    case SeriesKind::kTrigWeightedDouble:
      return 4;
  }
  return 0;
}

SeriesAccumulator::SeriesAccumulator(SeriesKind kind)
    : kind_(kind), state_(std::make_unique<State>()) {
  // Terms whose printed sum starts at i = 0.
  state_->band_term = frac(4 + 1, 1 * 5 * 9);
  state_->inv_band = frac(1, 1 * 5 * 9);
}

SeriesAccumulator::~SeriesAccumulator() = default;
SeriesAccumulator::SeriesAccumulator(SeriesAccumulator&&) noexcept = default;
SeriesAccumulator& SeriesAccumulator::operator=(SeriesAccumulator&&) noexcept =
    default;

void SeriesAccumulator::advance() {
  const unsigned n = ++q_;
  State& s = *state_;
  if (!is_trig(kind_)) {
    const long long i = n;
    // 1/(4i^2-1) starts at i = 1 for the unweighted form and at i = 2 for
    // the weighted one; the i = 1 term is dropped in normalized().
    s.inv_4i2m1 += frac(1, 4 * i * i - 1);
    s.inv_sq_outer += frac(1, (2 * i - 1) * (2 * i - 1) * (2 * i + 3) * (2 * i + 3));
    s.band_term += frac((i + 2) * (i + 2) + (i + 1) * (i + 1),
                        (2 * i + 1) * (2 * i + 5) * (2 * i + 3) * (2 * i + 3));
    s.inv_band += frac(1, (2 * i + 1) * (2 * i + 5) * (2 * i + 3) * (2 * i + 3));
    return;
  }
  const Big r(n);
  s.inv_r2 += 1 / (r * r);
  s.inv_r4 += 1 / (r * r * r * r);
  if (kind_ == SeriesKind::kTrigTriple ||
      kind_ == SeriesKind::kTrigTripleUntailed) {
    const double d = n;
    for (unsigned l = 1; l < n; ++l) {
      s.cross.add(triple_cross(d, l));
      s.cross.add(triple_cross(l, d));
    }
  } else if (kind_ == SeriesKind::kTrigWeightedDouble) {
    const double d = n;
    for (unsigned l = 1; l < n; ++l) {
      s.cross.add(weighted_cross(d, l));
      s.cross.add(weighted_cross(l, d));
    }
  }
}

void SeriesAccumulator::advance_to(unsigned q) {
  if (q < q_) throw std::invalid_argument("series accumulator cannot rewind");
  while (q_ < q) advance();
}

double SeriesAccumulator::normalized() const {
  const State& s = *state_;
  const Big pi = boost::math::constants::pi<Big>();
  const Big pi2 = pi * pi;
  const Big pi4 = pi2 * pi2;
  const Big alpha = pi2 / 6 - s.inv_r2;
  const Big cross(s.cross.value());
  Big v;
  switch (kind_) {
    case SeriesKind::kLegendreDouble:
      v = (frac(1, 2) - s.inv_4i2m1) / 2;
      break;
    case SeriesKind::kLegendreWeightedDouble: {
      const Big from_two = q_ >= 1 ? s.inv_4i2m1 - frac(1, 3) : Big(0);
      v = (frac(5, 9) - 2 * from_two - s.inv_sq_outer - s.band_term) / 16;
      break;
    }
    case SeriesKind::kLegendreWeightedDoubleEqual:
      v = (frac(1, 9) - s.inv_band - 2 * s.inv_sq_outer) / 16;
      break;
    case SeriesKind::kTrigDouble:
    case SeriesKind::kTrigSingleWeightedUntailed:
      v = alpha / (2 * pi2);
      break;
    case SeriesKind::kTrigDoubleUntailed:
      v = 3 * alpha / (2 * pi2);
      break;
    case SeriesKind::kTrigTriple:
      v = frac(4, 45) - s.inv_r2 / (4 * pi2) - 55 * s.inv_r4 / (32 * pi4) -
          cross / (4 * pi4);
      break;
    case SeriesKind::kTrigTripleUntailed:
      v = frac(5, 36) - s.inv_r2 / (2 * pi2) - 79 * s.inv_r4 / (32 * pi4) -
          cross / (4 * pi4);
      break;
    case SeriesKind::kTrigWeightedDouble:
      v = (frac(1, 9) - s.inv_r2 / (2 * pi2) - 5 * s.inv_r4 / (8 * pi4) -
           cross / pi4) /
          4;
      break;
  }
  return v.convert_to<double>();
}

double series_error_normalized(SeriesKind kind, unsigned q) {
  SeriesAccumulator acc(kind);
  acc.advance_to(q);
  return acc.normalized();
}

double series_error(SeriesKind kind, unsigned q, double dt) {
  return series_error_normalized(kind, q) * std::pow(dt, dt_exponent(kind));
}

std::vector<ErrorTable> error_tables() {
  const std::vector<unsigned> qs = {1, 10, 100, 1000, 10000};
  return {
      {1, SeriesKind::kLegendreDouble, 2, qs},
      {2, SeriesKind::kLegendreWeightedDouble, 16, qs},
      {3, SeriesKind::kLegendreWeightedDoubleEqual, 16, qs},
      {38, SeriesKind::kTrigTriple, 1, qs},
      {41, SeriesKind::kTrigTripleUntailed, 1, qs},
      {42, SeriesKind::kTrigWeightedDouble, 4, qs},
  };
}

ErrorTable error_table(unsigned number) {
  for (const auto& t : error_tables()) {
    if (t.number == number) return t;
  }
  throw std::out_of_range("no error table " + std::to_string(number));
}

}  // namespace isi
