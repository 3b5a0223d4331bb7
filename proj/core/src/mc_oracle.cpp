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

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include <boost/random/normal_distribution.hpp>

#include "json.hpp"

#include "isi/error.hpp"
#include "isi/errors.hpp"

namespace isi {
namespace {

// Fixed-shape pairwise sum, so the result does not depend on thread count.
double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

double pairwise_mean(const std::vector<double>& x) {
  return pairwise_sum(x.data(), x.size()) / static_cast<double>(x.size());
}

// Runs body(path) for every path, splitting contiguous blocks over threads.
void for_each_path(std::uint64_t paths, unsigned threads,
                   const std::function<void(std::uint64_t)>& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || paths < threads) {
    for (std::uint64_t p = 0; p < paths; ++p) body(p);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failures(threads);
  const std::uint64_t block = (paths + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::uint64_t lo = t * block;
        const std::uint64_t hi = std::min(paths, lo + block);
        for (std::uint64_t p = lo; p < hi; ++p) body(p);
      } catch (...) {
        failures[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

// Legendre P_0..P_n at x.
void legendre_values(double x, unsigned n, std::vector<double>& out) {
  out.assign(n + 1, 0.0);
  out[0] = 1;
  if (n >= 1) out[1] = x;
  for (unsigned j = 1; j < n; ++j) {
    out[j + 1] = ((2.0 * j + 1) * x * out[j] - j * out[j - 1]) / (j + 1);
  }
}

}  // namespace

void SimConfig::validate() const {
  if (steps < 2 || steps % 2 != 0) {
    throw std::invalid_argument("steps must be even and at least 2");
  }
  if (paths < 1) throw std::invalid_argument("paths must be at least 1");
  if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
}

MomentEstimate estimate_moments(const std::vector<double>& samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("need at least two samples");
  }
  const double n = static_cast<double>(samples.size());
  std::vector<double> sq(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    sq[i] = samples[i] * samples[i];
  }
  MomentEstimate m;
  m.mean = pairwise_mean(samples);
  m.second_moment = pairwise_mean(sq);
  std::vector<double> dev(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    dev[i] = (samples[i] - m.mean) * (samples[i] - m.mean);
  }
  m.mean_se = std::sqrt(pairwise_sum(dev.data(), dev.size()) / (n - 1) / n);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    dev[i] = (sq[i] - m.second_moment) * (sq[i] - m.second_moment);
  }
  m.second_moment_se =
      std::sqrt(pairwise_sum(dev.data(), dev.size()) / (n - 1) / n);
  return m;
}

std::vector<double> wiener_increments(std::uint64_t seed, std::uint64_t path,
                                      unsigned steps, unsigned m, double dt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(path),
                    static_cast<std::uint32_t>(path >> 32)};
  std::mt19937_64 gen(seq);
  // Boost's ziggurat sampler: several times faster than the standard
  // library's, and its output is the same on every platform.
  boost::random::normal_distribution<double> normal(0.0, std::sqrt(dt / steps));
  std::vector<double> out(static_cast<std::size_t>(steps) * m);
  for (double& x : out) x = normal(gen);
  return out;
}

std::vector<double> coarsen(const std::vector<double>& increments,
                            unsigned m) {
  const std::size_t steps = increments.size() / m;
  if (steps % 2 != 0) throw std::invalid_argument("odd step count");
  std::vector<double> out(increments.size() / 2);
  for (std::size_t n = 0; n < steps / 2; ++n) {
    for (unsigned c = 0; c < m; ++c) {
      out[n * m + c] =
          increments[2 * n * m + c] + increments[(2 * n + 1) * m + c];
    }
  }
  return out;
}

double iterated_on_grid(const KernelSpec& spec, const IndexPattern& pattern,
                        const std::vector<double>& increments, unsigned m,
                        double dt, Calculus calculus) {
  const unsigned k = spec.k();
  if (pattern.k() != k) {
    throw std::invalid_argument("pattern length differs from multiplicity");
  }
  if (pattern.max_component() > m) {
    throw std::invalid_argument("pattern uses more components than drawn");
  }
  const std::size_t steps = increments.size() / m;
  const double h = dt / static_cast<double>(steps);
  // J[r] holds the level-r partial integral; J[0] = 1.
  std::vector<double> J(k + 1, 0.0);
  J[0] = 1;
  std::vector<double> psi(k + 1, 1.0);
  std::vector<unsigned> comp(k + 1, 0);
  for (unsigned r = 1; r <= k; ++r) comp[r] = pattern.components[r - 1] - 1;
  for (std::size_t n = 0; n < steps; ++n) {
    const double* dw = increments.data() + n * m;
    // Kernel weight (t - s)^l with t the left endpoint, at the midpoint.
    const double lag = -(static_cast<double>(n) + 0.5) * h;
    for (unsigned r = 1; r <= k; ++r) {
      double w = 1;
      for (unsigned e = 0; e < spec.weights[r - 1]; ++e) w *= lag;
      psi[r] = w;
    }
    for (unsigned r = k; r >= 1; --r) {
      double incr = dw[comp[r]] * J[r - 1];
      if (r >= 2) {
        double pair = 0.5 * dw[comp[r - 1]] * dw[comp[r]];
        if (calculus == Calculus::kIto && comp[r - 1] == comp[r]) {
          pair -= 0.5 * h;
        }
        incr += psi[r - 1] * J[r - 2] * pair;
      }
      J[r] += psi[r] * incr;
    }
  }
  return J[k];
}

LegendreProjector::LegendreProjector(unsigned steps, unsigned q_max,
                                     double dt)
    : steps_(steps), q_max_(q_max),
      avg_(static_cast<std::size_t>(q_max + 1) * steps) {
  // Antiderivative of P_j vanishing at -1: (P_{j+1} - P_{j-1}) / (2j+1),
  // and x + 1 for j = 0.
  std::vector<double> prev(q_max + 1);
  std::vector<double> cur(q_max + 1);
  std::vector<double> p;
  auto antideriv = [&](double x, std::vector<double>& out) {
    legendre_values(x, q_max + 1, p);
    out[0] = x + 1;
    for (unsigned j = 1; j <= q_max; ++j) {
      out[j] = (p[j + 1] - p[j - 1]) / (2.0 * j + 1);
    }
  };
  antideriv(-1.0, prev);
  const double dx = 2.0 / steps;
  for (unsigned n = 0; n < steps; ++n) {
    antideriv(-1.0 + 2.0 * (n + 1) / steps, cur);
    for (unsigned j = 0; j <= q_max; ++j) {
      avg_[static_cast<std::size_t>(j) * steps + n] =
          std::sqrt((2.0 * j + 1) / dt) * (cur[j] - prev[j]) / dx;
    }
    std::swap(prev, cur);
  }
}

NoiseDraws LegendreProjector::project(const std::vector<double>& increments,
                                      unsigned m) const {
  if (increments.size() != static_cast<std::size_t>(steps_) * m) {
    throw std::invalid_argument("increment table does not match the grid");
  }
  std::vector<double> zeta(static_cast<std::size_t>(m) * (q_max_ + 1), 0.0);
  for (unsigned c = 0; c < m; ++c) {
    for (unsigned j = 0; j <= q_max_; ++j) {
      const double* a = avg_.data() + static_cast<std::size_t>(j) * steps_;
      double s = 0;
      for (unsigned n = 0; n < steps_; ++n) {
        s += a[n] * increments[static_cast<std::size_t>(n) * m + c];
      }
      zeta[static_cast<std::size_t>(c) * (q_max_ + 1) + j] = s;
    }
  }
  return NoiseDraws(m, q_max_, std::move(zeta));
}

std::vector<double> simulate_iterated(const KernelSpec& spec,
                                      const IndexPattern& pattern,
                                      const SimConfig& cfg) {
  cfg.validate();
  spec.validate();
  pattern.validate();
  const unsigned m = pattern.max_component();
  std::vector<double> out(cfg.paths);
  for_each_path(cfg.paths, cfg.threads, [&](std::uint64_t p) {
    const auto dw = wiener_increments(cfg.seed, p, cfg.steps, m, cfg.dt);
    out[p] = iterated_on_grid(spec, pattern, dw, m, cfg.dt, cfg.calculus);
  });
  return out;
}

std::vector<ValidationCase> default_cases() {
  return {
      {"double-distinct", KernelSpec::unweighted(2), {{1, 2}}, 2,
       ExpansionMethod::kTensor, SeriesKind::kLegendreDouble},
      {"weighted-double-equal", KernelSpec{{1, 0}}, {{1, 1}}, 2,
       ExpansionMethod::kDoubleSeries,
       SeriesKind::kLegendreWeightedDoubleEqual},
      {"triple-distinct", KernelSpec::unweighted(3), {{1, 2, 3}}, 6,
       ExpansionMethod::kTensor, std::nullopt},
      {"weighted-double-inner", KernelSpec{{1, 0}}, {{1, 2}}, 3,
       ExpansionMethod::kDoubleSeries, SeriesKind::kLegendreWeightedDouble},
      {"weighted-double-outer", KernelSpec{{0, 1}}, {{1, 2}}, 3,
       ExpansionMethod::kDoubleSeries, SeriesKind::kLegendreWeightedDouble},
  };
}

bool ValidationReport::passed(double threshold) const {
  return std::isfinite(z) && std::abs(z) < threshold;
}

ValidationReport validate_expansion(const ValidationCase& c,
                                    const SimConfig& cfg) {
  cfg.validate();
  c.spec.validate();
  c.pattern.validate();
  if (c.pattern.k() != c.spec.k()) {
    throw std::invalid_argument("pattern length differs from multiplicity");
  }
  if (c.method == ExpansionMethod::kDoubleSeries && c.spec.k() != 2) {
    throw std::invalid_argument("double-series method needs k = 2");
  }
  if (cfg.paths < 2) throw std::invalid_argument("need at least two paths");
  const unsigned m = c.pattern.max_component();
  const unsigned q_max =
      c.method == ExpansionMethod::kTensor ? c.q : c.q + 3;

  std::optional<ScaledTensor> tensor;
  if (c.method == ExpansionMethod::kTensor) {
    tensor.emplace(scale(coeff_tensor(c.spec, c.q), cfg.dt));
  }
  auto expand = [&](const NoiseDraws& draws) {
    if (tensor) return expansion(*tensor, c.pattern, draws, c.q, cfg.calculus);
    return legendre_double_series(c.spec.weights[0], c.spec.weights[1],
                                  c.pattern.components[0],
                                  c.pattern.components[1], draws, c.q, cfg.dt,
                                  cfg.calculus);
  };

  ValidationReport r;
  r.name = c.name;
  r.q = c.q;
  r.dt = cfg.dt;
  r.paths = cfg.paths;
  r.theoretical =
      c.series ? series_error(*c.series, c.q, cfg.dt)
               : exact_error(coeff_tensor(c.spec, c.q),
                             EqualityPattern::from(c.pattern), cfg.dt);

  for (unsigned steps = cfg.steps;; steps *= 2) {
    if (steps > cfg.max_steps) {
      throw ResourceLimitError("grid refinement for " + c.name +
                               " exceeded " + std::to_string(cfg.max_steps) +
                               " steps");
    }
    const LegendreProjector fine(steps, q_max, cfg.dt);
    const LegendreProjector coarse(steps / 2, q_max, cfg.dt);
    std::vector<double> sq_fine(cfg.paths);
    std::vector<double> sq_coarse(cfg.paths);
    for_each_path(cfg.paths, cfg.threads, [&](std::uint64_t p) {
      const auto dw = wiener_increments(cfg.seed, p, steps, m, cfg.dt);
      const auto dw2 = coarsen(dw, m);
      const double ef =
          iterated_on_grid(c.spec, c.pattern, dw, m, cfg.dt, cfg.calculus) -
          expand(fine.project(dw, m));
      const double ec =
          iterated_on_grid(c.spec, c.pattern, dw2, m, cfg.dt, cfg.calculus) -
          expand(coarse.project(dw2, m));
      sq_fine[p] = ef * ef;
      sq_coarse[p] = ec * ec;
    });
    const double mean_f = pairwise_mean(sq_fine);
    const double mean_c = pairwise_mean(sq_coarse);
    std::vector<double> dev(cfg.paths);
    for (std::size_t i = 0; i < dev.size(); ++i) {
      dev[i] = (sq_fine[i] - mean_f) * (sq_fine[i] - mean_f);
    }
    const double n = static_cast<double>(cfg.paths);
    r.steps = steps;
    r.empirical = mean_f;
    r.standard_error =
        std::sqrt(pairwise_sum(dev.data(), dev.size()) / (n - 1) / n);
    r.bias_estimate = std::abs(mean_f - mean_c);
    r.z = (r.empirical - r.theoretical) / r.standard_error;
    if (r.bias_estimate <= r.standard_error / 3) break;
  }
  return r;
}

namespace {

nlohmann::ordered_json report_json(const ValidationReport& r) {
  nlohmann::ordered_json j;
  j["case"] = r.name;
  j["q"] = r.q;
  j["dt"] = r.dt;
  j["N"] = r.steps;
  j["P"] = r.paths;
  j["empirical"] = r.empirical;
  j["theoretical"] = r.theoretical;
  j["z"] = r.z;
  return j;
}

}  // namespace

std::string report_to_json(const ValidationReport& r) {
  return report_json(r).dump(2);
}

std::string reports_to_json(const std::vector<ValidationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

}  // namespace isi
