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
// Acceptance run: one PASS/FAIL line per criterion, checked against the
// published values with the published tolerances. Exit status is 0 only when
// every criterion passes.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "isi/error.hpp"
#include "isi/expansion.hpp"
#include "isi/mc_oracle.hpp"
#include "isi/table_layouts.hpp"
#include "isi/qselect.hpp"
#include "isi/series.hpp"
#include "published_tables.hpp"

namespace isi {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Half a unit in the last printed digit of a decimal string such as
// "0.0070" or "6.3178e-14".
double half_unit(const std::string& printed) {
  const std::size_t e = printed.find_first_of("eE");
  const std::string mantissa = printed.substr(0, e);
  const int exponent = e == std::string::npos ? 0 : std::stoi(printed.substr(e + 1));
  const std::size_t dot = mantissa.find('.');
  const int decimals =
      dot == std::string::npos ? 0 : static_cast<int>(mantissa.size() - dot - 1);
  return 0.5 * std::pow(10.0, exponent - decimals);
}

bool matches_printed(double value, const std::string& printed) {
  return std::abs(value - std::stod(printed)) <= half_unit(printed) * (1 + 1e-9);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome exact_tables() {
  const auto start = std::chrono::steady_clock::now();
  const auto published = testing::published_coefficient_tables();
  Outcome o;
  unsigned cells = 0, mismatches = 0;
  std::ostringstream where;
  for (unsigned n : coefficient_table_numbers()) {
    const auto computed = coefficient_table(coefficient_table_layout(n));
    const auto& printed = published.at(n);
    for (unsigned r = 0; r < printed.size(); ++r) {
      for (unsigned c = 0; c < printed[r].size(); ++c) {
        ++cells;
        if (computed[r][c] != printed[r][c]) {
          ++mismatches;
          where << " table " << n << " (" << r << "," << c << ") published "
                << to_fraction_string(printed[r][c]) << " computed "
                << to_fraction_string(computed[r][c]) << ';';
        }
      }
    }
  }
  const double secs = seconds_since(start);
  o.pass = mismatches == 0 && secs < 10;
  o.detail = std::to_string(cells) + " cells, " + std::to_string(mismatches) +
             " mismatches," + where.str() + " " + fmt(secs) + " s";
  return o;
}

Outcome error_series() {
  const auto start = std::chrono::steady_clock::now();
  struct Printed {
    unsigned table;
    std::vector<std::string> values;
  };
  const std::vector<Printed> printed = {
      {1, {"0.1667", "0.0238", "0.0025", "2.4988e-4", "2.4999e-5"}},
      {2, {"0.3797", "0.0581", "0.0062", "6.2450e-4", "6.2495e-5"}},
      {3, {"0.0070", "4.3551e-5", "6.0076e-8", "6.2251e-11", "6.3178e-14"}},
      {38, {"0.0459", "0.0072", "7.5722e-4", "7.5973e-5", "7.5990e-6"}},
      {41, {"0.0629", "0.0097", "0.0010", "1.0129e-4", "1.0132e-5"}},
      {42, {"0.0540", "0.0082", "8.4261e-4", "8.4429e-5", "8.4435e-6"}},
  };
  Outcome o;
  unsigned checked = 0, mismatches = 0;
  std::ostringstream where;
  for (const auto& p : printed) {
    const ErrorTable t = error_table(p.table);
    SeriesAccumulator acc(t.kind);
    for (std::size_t i = 0; i < p.values.size(); ++i) {
      acc.advance_to(t.qs[i]);
      const double v = t.factor * acc.normalized();
      ++checked;
      if (!matches_printed(v, p.values[i])) {
        ++mismatches;
        where << " table " << p.table << " q=" << t.qs[i] << " published " << p.values[i]
              << " computed " << fmt(v) << ';';
      }
    }
  }
  const double secs = seconds_since(start);
  o.pass = mismatches == 0 && secs < 30;
  o.detail = std::to_string(checked) + " values, " + std::to_string(mismatches) +
             " mismatches," + where.str() + " " + fmt(secs) + " s";
  return o;
}

Outcome exact_error_constants() {
  const auto start = std::chrono::steady_clock::now();
  struct Case {
    KernelSpec spec;
    unsigned q;
    std::string printed;
  };
  const std::vector<Case> cases = {
      {KernelSpec::unweighted(3), 6, "0.01956"},
      {KernelSpec::unweighted(4), 2, "0.0236084"},
      {KernelSpec{{1, 0, 0}}, 2, "0.00815429"},
      {KernelSpec{{0, 1, 0}}, 2, "0.0173903"},
      {KernelSpec{{0, 0, 1}}, 2, "0.0252801"},
      {KernelSpec::unweighted(5), 1, "0.00759105"},
  };
  Outcome o;
  std::ostringstream detail;
  for (const auto& c : cases) {
    const Rational e =
        exact_error_unit(coeff_tensor(c.spec, c.q), EqualityPattern::distinct(c.spec.k()));
    const double v = to_double(e);
    const bool ok = matches_printed(v, c.printed);
    o.pass = o.pass && ok;
    detail << ' ' << c.spec.label() << " q=" << c.q << ' ' << to_fraction_string(e) << " = "
           << fmt(v) << (ok ? " matches " : " differs from ") << c.printed << ';';
  }
  const double secs = seconds_since(start);
  o.pass = o.pass && secs < 60;
  o.detail = detail.str() + ' ' + fmt(secs) + " s";
  return o;
}

Outcome q_selection() {
  const std::vector<std::pair<unsigned, std::vector<std::vector<unsigned>>>> published = {
      {37,
       {{3, 4, 7, 14, 27, 53, 105, 209},
        {6, 11, 20, 40, 79, 157, 312, 624},
        {5, 9, 17, 33, 65, 129, 257, 513}}},
      {39, {{19, 51, 235, 328}, {1, 2, 5, 6}}},
      {40, {{8, 21, 96, 133}, {1, 1, 3, 4}, {23, 61, 286, 398}, {1, 2, 4, 5}}},
  };
  const std::vector<double> published_ratio = {1.67, 2.22, 2.43, 2.36, 2.41, 2.43, 2.45, 2.45};
  Outcome o;
  unsigned entries = 0, mismatches = 0;
  std::ostringstream where;
  std::vector<unsigned> trig, pol;
  for (const auto& [number, rows] : published) {
    const QTableResult r = evaluate(q_table(number));
    for (std::size_t row = 0; row < rows.size(); ++row) {
      for (std::size_t c = 0; c < rows[row].size(); ++c) {
        ++entries;
        if (r.q[row][c] != rows[row][c]) {
          ++mismatches;
          where << ' ' << number << '/' << condition_name(r.table.rows[row]) << '['
                << c << "] " << r.q[row][c] << " vs " << rows[row][c] << ';';
        }
      }
      if (r.table.rows[row] == ConditionId::kTab37Trig) trig = r.q[row];
      if (r.table.rows[row] == ConditionId::kTab37Pol) pol = r.q[row];
    }
  }
  unsigned ratio_mismatches = 0;
  for (std::size_t c = 0; c < published_ratio.size(); ++c) {
    const double ratio = static_cast<double>(pol[c]) / trig[c];
    if (std::abs(ratio - published_ratio[c]) > 0.005 + 1e-12) {
      ++ratio_mismatches;
      where << " ratio[" << c << "] " << fmt(ratio) << " vs " << published_ratio[c] << ';';
    }
  }
  o.pass = mismatches == 0 && ratio_mismatches == 0;
  o.detail = std::to_string(entries) + " entries, " + std::to_string(mismatches) +
             " mismatches, " + std::to_string(ratio_mismatches) + " ratio mismatches;" +
             where.str();
  return o;
}

Outcome pathwise_identities() {
  const double dt = 0.3;
  auto rel = [](double a, double b) {
    return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
  };
  double worst = 0;
  unsigned checks = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const NoiseDraws d = draw_noise(24, 1, seed);
    const double i0 = legendre_closed_single(0, 1, d, dt);
    const double i1 = legendre_closed_single(1, 1, d, dt);
    const double i2 = legendre_closed_single(2, 1, d, dt);
    for (unsigned q : {0u, 1u, 5u, 20u}) {
      auto s = [&](unsigned a, unsigned b, Calculus c) {
        return legendre_double_series(a, b, 1, 1, d, q, dt, c);
      };
      const auto S = Calculus::kStratonovich;
      const auto I = Calculus::kIto;
      for (double r : {rel(s(1, 0, S) + s(0, 1, S), i0 * i1),
                       rel(s(1, 1, S), i1 * i1 / 2),
                       rel(s(2, 0, S) + s(0, 2, S), i0 * i2),
                       rel(s(1, 0, I) + s(0, 1, I), i0 * i1 + dt * dt / 2),
                       rel(s(2, 0, I) + s(0, 2, I), i0 * i2 - dt * dt * dt / 3)}) {
        worst = std::max(worst, r);
        ++checks;
      }
    }
  }
  return {worst <= 1e-10,
          std::to_string(checks) + " checks, worst relative error " + fmt(worst)};
}

Outcome statistical_validation() {
  const auto start = std::chrono::steady_clock::now();
  SimConfig cfg;
  cfg.paths = 100'000;
  cfg.steps = 1u << 12;
  cfg.seed = 42;
  cfg.dt = 0.5;
  Outcome o;
  std::ostringstream detail;
  for (const ValidationCase& c : default_cases()) {
    const ValidationReport r = validate_expansion(c, cfg);
    o.pass = o.pass && r.passed(3.0);
    detail << ' ' << r.name << " z=" << fmt(r.z) << " (N=" << r.steps << ");";
    std::fflush(stdout);
  }
  const double secs = seconds_since(start);
  o.pass = o.pass && secs <= 300;
  o.detail = "P=100000" + detail.str() + ' ' + fmt(secs) + " s";
  return o;
}

Outcome property_suites() {
  const std::string cmd = std::string(ISI_PROPERTY_TESTS_PATH) + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  const int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return {status == 0, "standalone property binary exit status " + std::to_string(status)};
}

}  // namespace
}  // namespace isi

int main() {
  using isi::Outcome;
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, isi::exact_tables},          {2, isi::error_series},
      {3, isi::exact_error_constants}, {4, isi::q_selection},
      {5, isi::pathwise_identities},   {6, isi::statistical_validation},
      {7, isi::property_suites},
  };
  bool all = true;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("criterion %d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
