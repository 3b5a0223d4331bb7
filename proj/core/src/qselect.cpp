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

#include "isi/qselect.hpp"

#include <cmath>
#include <stdexcept>

#include "isi/coefficients.hpp"
#include "isi/error.hpp"
#include "isi/errors.hpp"
#include "isi/pattern.hpp"
#include "isi/series.hpp"

namespace isi {
namespace {

std::optional<SeriesKind> series_of(ConditionId id) {
  switch (id) {
    case ConditionId::kZ1:
    case ConditionId::kTab37Pol:
      return SeriesKind::kLegendreDouble;
    case ConditionId::kZ3:
    case ConditionId::kTab37Trig:
      return SeriesKind::kTrigDouble;
    case ConditionId::kZzz3:
    case ConditionId::kTab37TrigStar:
      return SeriesKind::kTrigDoubleUntailed;
    case ConditionId::kZ4:
      return SeriesKind::kTrigTriple;
    case ConditionId::kZzz4:
      return SeriesKind::kTrigTripleUntailed;
    case ConditionId::kZ2:
      return std::nullopt;
  }
  return std::nullopt;
}

double exact_triple_unit(unsigned q) {
  const CoeffTensor t = coeff_tensor(KernelSpec::unweighted(3), q);
  return to_double(exact_error_unit(t, EqualityPattern::distinct(3)));
}

void check_dt(double dt) {
  if (!(dt > 0 && dt < 1)) throw std::invalid_argument("dt must lie in (0, 1)");
}

}  // namespace

std::vector<ConditionId> all_conditions() {
  return {ConditionId::kZ1,        ConditionId::kZ2,
          ConditionId::kZ3,        ConditionId::kZ4,
          ConditionId::kZzz3,      ConditionId::kZzz4,
          ConditionId::kTab37Trig, ConditionId::kTab37TrigStar,
          ConditionId::kTab37Pol};
}

std::string condition_name(ConditionId id) {
  switch (id) {
    case ConditionId::kZ1: return "z1";
    case ConditionId::kZ2: return "z2";
    case ConditionId::kZ3: return "z3";
    case ConditionId::kZ4: return "z4";
    case ConditionId::kZzz3: return "zzz3";
    case ConditionId::kZzz4: return "zzz4";
    case ConditionId::kTab37Trig: return "tab37_trig";
    case ConditionId::kTab37TrigStar: return "tab37_trig_star";
    case ConditionId::kTab37Pol: return "tab37_pol";
  }
  return "";
}

std::optional<ConditionId> parse_condition(const std::string& name) {
  for (ConditionId id : all_conditions()) {
    if (condition_name(id) == name) return id;
  }
  return std::nullopt;
}

unsigned lower_index(ConditionId id) { return id == ConditionId::kZ2 ? 0 : 1; }

unsigned target_exponent(ConditionId id) {
  switch (id) {
    case ConditionId::kTab37Trig:
    case ConditionId::kTab37TrigStar:
    case ConditionId::kTab37Pol:
      return 3;
    default:
      return 4;
  }
}

double condition_lhs(const Condition& cond, unsigned q) {
  if (auto kind = series_of(cond.id)) return series_error(*kind, q, cond.dt);
  return exact_triple_unit(q) * std::pow(cond.dt, 3);
}

unsigned min_q(const Condition& cond, const QSelectOptions& options) {
  check_dt(cond.dt);
  const double rhs = std::pow(cond.dt, target_exponent(cond.id));
  const unsigned lo = lower_index(cond.id);
  if (auto kind = series_of(cond.id)) {
    const double scale = std::pow(cond.dt, dt_exponent(*kind));
    SeriesAccumulator acc(*kind);
    acc.advance_to(lo);
    while (acc.q() <= options.cap) {
      if (acc.normalized() * scale <= rhs) return acc.q();
      acc.advance();
    }
  } else {
    const double cube = std::pow(cond.dt, 3);
    for (unsigned q = lo; q <= options.cap; ++q) {
      if (exact_triple_unit(q) * cube <= rhs) return q;
    }
  }
  throw ResourceLimitError("no q up to " + std::to_string(options.cap) +
                           " satisfies " + condition_name(cond.id));
}

std::vector<QTable> q_tables() {
  std::vector<double> binary;
  for (int e = 5; e <= 12; ++e) binary.push_back(std::ldexp(1.0, -e));
  const std::vector<double> decimal = {0.08222, 0.05020, 0.02310, 0.01956};
  return {
      {37,
       {ConditionId::kTab37Trig, ConditionId::kTab37TrigStar,
        ConditionId::kTab37Pol},
       binary},
      {39, {ConditionId::kZ1, ConditionId::kZ2}, decimal},
      {40,
       {ConditionId::kZ3, ConditionId::kZ4, ConditionId::kZzz3,
        ConditionId::kZzz4},
       decimal},
  };
}

QTable q_table(unsigned number) {
  for (const auto& t : q_tables()) {
    if (t.number == number) return t;
  }
  throw std::out_of_range("no q table " + std::to_string(number));
}

QTableResult evaluate(const QTable& table, const QSelectOptions& options) {
  QTableResult out{table, {}};
  for (ConditionId id : table.rows) {
    std::vector<unsigned> row;
    for (double dt : table.dts) row.push_back(min_q({id, dt}, options));
    out.q.push_back(std::move(row));
  }
  return out;
}

}  // namespace isi
