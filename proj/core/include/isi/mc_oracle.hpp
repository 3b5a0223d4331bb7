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

// Monte Carlo reference values for iterated integrals.
//
// Each path draws Wiener increments on a fine grid of [0, dt]. The iterated
// integral is evaluated on that grid, and the expansion's Gaussian inputs
// are projected from the same increments, so the expansion and the
// reference share one Brownian path.

#ifndef ISI_MC_ORACLE_HPP_
#define ISI_MC_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isi/coefficients.hpp"
#include "isi/expansion.hpp"
#include "isi/pattern.hpp"
#include "isi/series.hpp"

namespace isi {

struct SimConfig {
  unsigned steps = 1u << 12;
  std::uint64_t paths = 100'000;
  std::uint64_t seed = 42;
  double dt = 0.5;
  Calculus calculus = Calculus::kIto;
  unsigned threads = 1;
  // Largest grid the bias check may escalate to.
  unsigned max_steps = 1u << 15;

  // Throws std::invalid_argument unless steps >= 2, steps is even, paths >= 1
  // and dt > 0.
  void validate() const;
};

struct MomentEstimate {
  double mean = 0;
  double second_moment = 0;
  double mean_se = 0;
  double second_moment_se = 0;
};

MomentEstimate estimate_moments(const std::vector<double>& samples);

// Increments dW for one path, laid out step-major: entry n * m + (i - 1).
// Each path has its own generator keyed by (seed, path).
std::vector<double> wiener_increments(std::uint64_t seed, std::uint64_t path,
                                      unsigned steps, unsigned m, double dt);

// Sums adjacent step pairs, halving the grid.
std::vector<double> coarsen(const std::vector<double>& increments,
                            unsigned m);

// Grid evaluation of one iterated integral over [0, dt] with kernel weight
// (0 - s)^l on each variable. Within a step the first- and
// second-order terms are kept; the Ito form subtracts the step's expected
// square for adjacent equal components.
double iterated_on_grid(const KernelSpec& spec, const IndexPattern& pattern,
                        const std::vector<double>& increments, unsigned m,
                        double dt, Calculus calculus);

// Projections zeta_j = sum_n avg_n(phi_j) dW_n onto the orthonormal
// Legendre system of [0, dt], with exact cell averages.
class LegendreProjector {
 public:
  LegendreProjector(unsigned steps, unsigned q_max, double dt);
  unsigned steps() const { return steps_; }
  unsigned q_max() const { return q_max_; }
  NoiseDraws project(const std::vector<double>& increments, unsigned m) const;

 private:
  unsigned steps_;
  unsigned q_max_;
  std::vector<double> avg_;  // [j * steps + n]
};

std::vector<double> simulate_iterated(const KernelSpec& spec,
                                      const IndexPattern& pattern,
                                      const SimConfig& cfg);

enum class ExpansionMethod {
  kTensor,        // general truncated multiple sum of exact coefficients
  kDoubleSeries,  // printed double-integral series
};

struct ValidationCase {
  std::string name;
  KernelSpec spec;
  IndexPattern pattern;
  unsigned q = 0;
  ExpansionMethod method = ExpansionMethod::kTensor;
  // Reference value from a closed form; otherwise the exact error.
  std::optional<SeriesKind> series;
};

std::vector<ValidationCase> default_cases();

struct ValidationReport {
  std::string name;
  unsigned q = 0;
  double dt = 0;
  unsigned steps = 0;
  std::uint64_t paths = 0;
  double empirical = 0;
  double theoretical = 0;
  double z = 0;
  double standard_error = 0;
  double bias_estimate = 0;

  bool passed(double threshold = 3.0) const;
};

// Mean square of (reference - expansion) over paths, with a grid check:
// the estimate at steps/2 must lie within a third of a standard error,
// otherwise the grid doubles. Throws ResourceLimitError past max_steps.
ValidationReport validate_expansion(const ValidationCase& c,
                                    const SimConfig& cfg);

// {case, q, dt, N, P, empirical, theoretical, z}
std::string report_to_json(const ValidationReport& r);
std::string reports_to_json(const std::vector<ValidationReport>& reports);

}  // namespace isi

#endif  // ISI_MC_ORACLE_HPP_
