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

// Closed-form mean-square errors of specific truncated series, as partial
// sums in q. Each value is error / dt^p with p = dt_exponent(kind).
//
// Single sums are carried in 50-digit binary floating point: several of
// these forms subtract partial sums from their limits and lose up to 13
// digits at q = 10^4. The double sums have no such cancellation and are
// accumulated in compensated double precision.

#ifndef ISI_SERIES_HPP_
#define ISI_SERIES_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace isi {

enum class SeriesKind {
  kLegendreDouble,               // unweighted double, distinct components
  kLegendreWeightedDouble,       // weight (t-s) on one variable, distinct
  kLegendreWeightedDoubleEqual,  // same, Ito form, equal components
  kTrigDouble,                   // unweighted double with tail term
  kTrigDoubleUntailed,           // unweighted double without tail term
  kTrigSingleWeightedUntailed,   // weight (t-s) single, no tail normal
  kTrigTriple,                   // unweighted triple, distinct, with tails
  kTrigTripleUntailed,           // unweighted triple, distinct, no tails
  kTrigWeightedDouble,           // weight (t-s) double, distinct
};

std::vector<SeriesKind> all_series_kinds();
std::string series_kind_name(SeriesKind kind);
std::optional<SeriesKind> parse_series_kind(const std::string& name);
unsigned dt_exponent(SeriesKind kind);

// Walks q = 0, 1, 2, ... keeping running sums, so a scan over q costs one
// pass rather than one pass per q.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(SeriesKind kind);
  ~SeriesAccumulator();
  SeriesAccumulator(SeriesAccumulator&&) noexcept;
  SeriesAccumulator& operator=(SeriesAccumulator&&) noexcept;

  SeriesKind kind() const { return kind_; }
  unsigned q() const { return q_; }
  void advance();
  void advance_to(unsigned q);
  // error / dt^p at the current q.
  double normalized() const;

 private:
  struct State;
  SeriesKind kind_;
  unsigned q_ = 0;
  std::unique_ptr<State> state_;
};

double series_error_normalized(SeriesKind kind, unsigned q);
double series_error(SeriesKind kind, unsigned q, double dt);

// Published confirmation tables: the printed quantity is
// factor * error / dt^p at each q.
struct ErrorTable {
  unsigned number;
  SeriesKind kind;
  double factor;
  std::vector<unsigned> qs;
};

std::vector<ErrorTable> error_tables();
// Throws std::out_of_range for an unknown number.
ErrorTable error_table(unsigned number);

}  // namespace isi

#endif  // ISI_SERIES_HPP_
