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

// Smallest truncation order meeting an accuracy target.

#ifndef ISI_QSELECT_HPP_
#define ISI_QSELECT_HPP_

#include <optional>
#include <string>
#include <vector>

namespace isi {

enum class ConditionId {
  kZ1,            // Legendre double error <= dt^4
  kZ2,            // exact Legendre triple error (distinct) <= dt^4
  kZ3,            // trig double with tail <= dt^4
  kZ4,            // trig triple with tails <= dt^4
  kZzz3,          // trig double without tail <= dt^4
  kZzz4,          // trig triple without tails <= dt^4
  kTab37Trig,     // trig double with tail <= dt^3
  kTab37TrigStar, // trig double without tail <= dt^3
  kTab37Pol,      // Legendre double <= dt^3
};

std::vector<ConditionId> all_conditions();
std::string condition_name(ConditionId id);
std::optional<ConditionId> parse_condition(const std::string& name);

struct Condition {
  ConditionId id;
  double dt;
};

// Lowest q the scan considers: 0 for the exact triple, 1 otherwise.
unsigned lower_index(ConditionId id);
// Power p of the right-hand side dt^p.
unsigned target_exponent(ConditionId id);
// Left-hand side at q.
double condition_lhs(const Condition& cond, unsigned q);

struct QSelectOptions {
  unsigned cap = 1'000'000;
};

// Upward linear scan. Throws ResourceLimitError when no q <= cap works, and
// std::invalid_argument unless 0 < dt < 1.
unsigned min_q(const Condition& cond, const QSelectOptions& options = {});

// A published table of minimal q: one row per condition, one column per dt.
struct QTable {
  unsigned number;
  std::vector<ConditionId> rows;
  std::vector<double> dts;
};

std::vector<QTable> q_tables();
QTable q_table(unsigned number);  // throws std::out_of_range

struct QTableResult {
  QTable table;
  std::vector<std::vector<unsigned>> q;  // [row][column]
};

QTableResult evaluate(const QTable& table, const QSelectOptions& options = {});

}  // namespace isi

#endif  // ISI_QSELECT_HPP_
