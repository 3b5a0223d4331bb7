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

#include "isi/trig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <sstream>
#include <thread>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "isi/errors.hpp"

namespace isi {
namespace {

using Complex = std::complex<double>;
using CPoly = std::vector<Complex>;  // index = power of u

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// f(u) = sum_n P_n(u) exp(2 pi i n u) on [0, 1].
class ExpPoly {
 public:
  static ExpPoly one() {
    ExpPoly e;
    e.terms_[0] = {Complex(1.0)};
    return e;
  }

  // f * u^l * g_j(u) for the unit-interval trigonometric basis.
  ExpPoly times_basis(unsigned l, unsigned j) const {
    std::vector<std::pair<int, Complex>> factors;
    if (j == 0) {
      factors.emplace_back(0, 1.0);
    } else {
      const int r = static_cast<int>((j + 1) / 2);
      if (j % 2 == 1) {  // sqrt2 sin = sqrt2 (e^{+} - e^{-}) / 2i
        const Complex c = Complex(std::sqrt(2.0), 0) / Complex(0, 2);
        factors.emplace_back(r, c);
        factors.emplace_back(-r, -c);
      } else {
        const Complex c(std::sqrt(2.0) / 2, 0);
        factors.emplace_back(r, c);
        factors.emplace_back(-r, c);
      }
    }
    ExpPoly out;
    for (const auto& [n, p] : terms_) {
      for (const auto& [m, c] : factors) {
        CPoly& dst = out.terms_[n + m];
        if (dst.size() < p.size() + l) dst.resize(p.size() + l);
        for (std::size_t i = 0; i < p.size(); ++i) dst[i + l] += c * p[i];
      }
    }
    return out;
  }

  // Antiderivative vanishing at u = 0. For n != 0 integration by parts gives
  // exp(i w u) * sum_s (-1)^s P^(s)(u) / (i w)^{s+1}.
  ExpPoly integral_from_zero() const {
    ExpPoly out;
    Complex constant = 0;
    for (const auto& [n, p] : terms_) {
      if (p.empty()) continue;
      if (n == 0) {
        CPoly& dst = out.terms_[0];
        if (dst.size() < p.size() + 1) dst.resize(p.size() + 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
          dst[i + 1] += p[i] / static_cast<double>(i + 1);
        }
        continue;
      }
      const Complex iw(0, kTwoPi * n);
      CPoly q(p.size());
      CPoly deriv = p;
      Complex factor = 1.0 / iw;
      while (!deriv.empty()) {
        for (std::size_t i = 0; i < deriv.size(); ++i) q[i] += factor * deriv[i];
        CPoly next(deriv.size() > 1 ? deriv.size() - 1 : 0);
        for (std::size_t i = 1; i < deriv.size(); ++i) {
          next[i - 1] = deriv[i] * static_cast<double>(i);
        }
        deriv = std::move(next);
        factor *= -1.0 / iw;
      }
      constant += q[0];
      CPoly& dst = out.terms_[n];
      if (dst.size() < q.size()) dst.resize(q.size());
      for (std::size_t i = 0; i < q.size(); ++i) dst[i] += q[i];
    }
    CPoly& zero = out.terms_[0];
    if (zero.empty()) zero.resize(1);
    zero[0] -= constant;
    return out;
  }

  // exp(2 pi i n) = 1, so f(1) is the sum of every coefficient.
  double value_at_one() const {
    Complex s = 0;
    for (const auto& [n, p] : terms_) {
      for (const Complex& c : p) s += c;
    }
    return s.real();
  }

 private:
  std::map<int, CPoly> terms_;
};

double unit_basis(unsigned j, double u) {
  if (j == 0) return 1.0;
  const double r = static_cast<double>((j + 1) / 2);
  const double arg = kTwoPi * r * u;
  return std::sqrt(2.0) * (j % 2 == 1 ? std::sin(arg) : std::cos(arg));
}

double scale_factor(const KernelSpec& spec, double dt) {
  if (!(dt > 0)) throw std::invalid_argument("interval length must be positive");
  const unsigned s = spec.weight_sum();
  const double v = std::pow(dt, s + 0.5 * spec.k());
  return (s % 2 == 1) ? -v : v;
}

void check_index(const KernelSpec& spec, const MultiIndex& j) {
  spec.validate();
  if (j.size() != spec.k()) {
    throw std::invalid_argument("multi-index length differs from multiplicity");
  }
}

class TrigBuilder {
 public:
  TrigBuilder(const KernelSpec& spec, unsigned extent, double scale,
              std::vector<double>& out)
      : spec_(spec), extent_(extent), scale_(scale), out_(out) {
    stride_.assign(spec.k(), 1);
    for (unsigned r = 1; r < spec.k(); ++r) stride_[r] = stride_[r - 1] * extent;
  }

  void run(unsigned first, unsigned step) {
    if (spec_.k() == 1) {
      if (first == 0) finish(ExpPoly::one(), 0);
      return;
    }
    for (unsigned j = first; j < extent_; j += step) {
      descend(0, j, ExpPoly::one(), 0);
    }
  }

 private:
  void descend(unsigned level, unsigned j, const ExpPoly& inner,
               std::size_t base) {
    const ExpPoly f =
        inner.times_basis(spec_.weights[level], j).integral_from_zero();
    const std::size_t here = base + j * stride_[level];
    if (level + 2 == spec_.k()) {
      finish(f, here);
      return;
    }
    for (unsigned next = 0; next < extent_; ++next) {
      descend(level + 1, next, f, here);
    }
  }

  void finish(const ExpPoly& inner, std::size_t base) {
    const unsigned last = spec_.k() - 1;
    for (unsigned j = 0; j < extent_; ++j) {
      out_[base + j * stride_[last]] =
          scale_ * inner.times_basis(spec_.weights[last], j)
                       .integral_from_zero()
                       .value_at_one();
    }
  }

  const KernelSpec& spec_;
  unsigned extent_;
  double scale_;
  std::vector<double>& out_;
  std::vector<std::size_t> stride_;
};

}  // namespace

double trig_unit_coeff(const KernelSpec& spec, const MultiIndex& j) {
  check_index(spec, j);
  ExpPoly f = ExpPoly::one();
  for (unsigned r = 0; r < spec.k(); ++r) {
    f = f.times_basis(spec.weights[r], j[r]).integral_from_zero();
  }
  return f.value_at_one();
}

double trig_coeff(const KernelSpec& spec, const MultiIndex& j, double dt) {
  return scale_factor(spec, dt) * trig_unit_coeff(spec, j);
}

double trig_coeff_quadrature(const KernelSpec& spec, const MultiIndex& j,
                             double dt, double tol) {
  check_index(spec, j);
  if (spec.k() > 3) {
    throw std::invalid_argument("quadrature cross-check supports k <= 3");
  }
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  constexpr unsigned kMaxDepth = 10;
  // Relative request per level. Tighter values fall below the rule's
  // roundoff floor and only force needless subdivision.
  constexpr double kLevelTol = 3e-12;
  double worst = 0;

  // inner(r, x) = integral over [0, x] of u^{l_r} g_{j_r}(u) inner(r-1, u).
  std::function<double(unsigned, double)> inner = [&](unsigned r,
                                                      double x) -> double {
    auto integrand = [&, r](double u) {
      double v = std::pow(u, spec.weights[r]) * unit_basis(j[r], u);
      if (r > 0) v *= inner(r - 1, u);
      return v;
    };
    if (x <= 0) return 0.0;
    double err = 0;
    const double v = Rule::integrate(integrand, 0.0, x, kMaxDepth, kLevelTol,
                                     &err);
    worst = std::max(worst, err);
    return v;
  };
  const double unit = inner(spec.k() - 1, 1.0);
  if (!(worst <= tol)) {
    std::ostringstream msg;
    msg << "trigonometric coefficient quadrature reached " << std::scientific
        << worst << " > " << tol;
    throw ConvergenceError(msg.str(), worst);
  }
  return scale_factor(spec, dt) * unit;
}

ScaledTensor trig_tensor(const KernelSpec& spec, unsigned extent, double dt,
                         const TensorOptions& options) {
  spec.validate();
  if (extent == 0) throw std::invalid_argument("extent must be positive");
  std::size_t entries = 1;
  for (unsigned r = 0; r < spec.k(); ++r) {
    if (entries > options.max_entries / extent) {
      throw ResourceLimitError("trigonometric tensor exceeds " +
                               std::to_string(options.max_entries) +
                               " entries");
    }
    entries *= extent;
  }
  const double scale = scale_factor(spec, dt);
  std::vector<double> values(entries);
  const unsigned threads = std::max(
      1u, std::min(options.threads, spec.k() == 1 ? 1u : extent));
  if (threads == 1) {
    TrigBuilder(spec, extent, scale, values).run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(
          [&, t] { TrigBuilder(spec, extent, scale, values).run(t, threads); });
    }
    for (auto& th : pool) th.join();
  }
  return ScaledTensor(spec, extent, dt, std::move(values));
}

}  // namespace isi
