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

#include "isi/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

#include "isi/errors.hpp"
#include "isi/legendre.hpp"
#include "isi/polynomial.hpp"

namespace isi {
namespace {

// Antiderivative vanishing at x = -1.
RatPoly integral_from_minus_one(const RatPoly& p) {
  RatPoly a = antiderivative(p);
  const Rational at_left = a(Rational(-1));
  return a - RatPoly::constant(at_left);
}

bool odd(unsigned n) { return (n & 1u) != 0; }

// Depth-first build of the tensor. Each prefix (j_1..j_r) owns one nested
// antiderivative shared by every completion of that prefix; the outermost
// index is read off a single Legendre projection.
class TensorBuilder {
 public:
  TensorBuilder(const KernelSpec& spec, unsigned q, Rational sign,
                std::vector<Rational>& out)
      : spec_(spec), q_(q), sign_(std::move(sign)), out_(out) {
    const unsigned k = spec.k();
    const unsigned max_degree = (k - 1) * (q + 1) + spec.weight_sum() + q + 1;
    basis_ = legendre_polys(max_degree);
    for (unsigned w : spec.weights) weight_polys_.push_back(RatPoly::one_plus_x_pow(w));
    stride_.assign(k, 1);
    for (unsigned r = 1; r < k; ++r) stride_[r] = stride_[r - 1] * (q + 1);
  }

  void run_level0_subset(unsigned first, unsigned step) {
    const RatPoly one = RatPoly::constant(1);
    if (spec_.k() == 1) {
      if (first == 0) finish(one, 0);
      return;
    }
    for (unsigned j = first; j <= q_; j += step) {
      descend(0, j, one, 0);
    }
  }

 private:
  void descend(unsigned level, unsigned j, const RatPoly& inner,
               std::size_t base) {
    const RatPoly f =
        integral_from_minus_one(inner * weight_polys_[level] * basis_[j]);
    const std::size_t here = base + j * stride_[level];
    if (level + 2 == spec_.k()) {
      finish(f, here);
      return;
    }
    for (unsigned next = 0; next <= q_; ++next) descend(level + 1, next, f, here);
  }

  void finish(const RatPoly& inner, std::size_t base) {
    const unsigned last = spec_.k() - 1;
    const RatPoly g = inner * weight_polys_[last];
    const auto c = to_legendre_basis(g, basis_);
    for (unsigned j = 0; j <= q_; ++j) {
      Rational v = 0;
      if (j < c.size() && c[j] != 0) {
        v = c[j] * make_rational(2, 2 * j + 1) * sign_;
      }
      out_[base + j * stride_[last]] = std::move(v);
    }
  }

  const KernelSpec& spec_;
  unsigned q_;
  Rational sign_;
  std::vector<Rational>& out_;
  std::vector<RatPoly> basis_;
  std::vector<RatPoly> weight_polys_;
  std::vector<std::size_t> stride_;
};

}  // namespace

KernelSpec KernelSpec::unweighted(unsigned k) {
  return KernelSpec{std::vector<unsigned>(k, 0)};
}

unsigned KernelSpec::weight_sum() const {
  unsigned s = 0;
  for (unsigned w : weights) s += w;
  return s;
}

void KernelSpec::validate() const {
  if (weights.empty() || weights.size() > 5) {
    throw std::invalid_argument("multiplicity must be between 1 and 5");
  }
}

std::string KernelSpec::label() const {
  std::string s;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(weights[i]);
  }
  return s;
}

Rational bar_coeff(const KernelSpec& spec, const MultiIndex& j,
                   Convention convention) {
  spec.validate();
  if (j.size() != spec.k()) {
    throw std::invalid_argument("multi-index length differs from multiplicity");
  }
  const unsigned max_j = *std::max_element(j.begin(), j.end());
  const auto basis = legendre_polys(max_j);
  RatPoly f = RatPoly::constant(1);
  for (unsigned r = 0; r < spec.k(); ++r) {
    f = integral_from_minus_one(f * RatPoly::one_plus_x_pow(spec.weights[r]) *
                                basis[j[r]]);
  }
  Rational v = f(Rational(1));
  if (convention == Convention::kSigned && odd(spec.weight_sum())) v = -v;
  return v;
}

CoeffTensor::CoeffTensor(KernelSpec spec, unsigned q, Convention convention,
                         std::vector<Rational> values)
    : spec_(std::move(spec)),
      q_(q),
      convention_(convention),
      values_(std::move(values)) {}

std::size_t CoeffTensor::linear_index(const MultiIndex& j) const {
  if (j.size() != spec_.k()) {
    throw std::invalid_argument("multi-index length differs from multiplicity");
  }
  std::size_t idx = 0;
  for (std::size_t r = j.size(); r-- > 0;) {
    if (j[r] > q_) throw std::out_of_range("index beyond tensor truncation");
    idx = idx * extent() + j[r];
  }
  return idx;
}

MultiIndex CoeffTensor::multi_index(std::size_t linear) const {
  MultiIndex j(spec_.k());
  for (auto& x : j) {
    x = static_cast<unsigned>(linear % extent());
    linear /= extent();
  }
  return j;
}

const Rational& CoeffTensor::at(const MultiIndex& j) const {
  return values_[linear_index(j)];
}

CoeffTensor coeff_tensor(const KernelSpec& spec, unsigned q,
                         const TensorOptions& options) {
  spec.validate();
  std::size_t entries = 1;
  for (unsigned r = 0; r < spec.k(); ++r) {
    if (entries > options.max_entries / (q + 1)) {
      throw ResourceLimitError("coefficient tensor (q+1)^k exceeds " +
                               std::to_string(options.max_entries) +
                               " entries");
    }
    entries *= q + 1;
  }
  const Rational sign =
      (options.convention == Convention::kSigned && odd(spec.weight_sum()))
          ? Rational(-1)
          : Rational(1);
  std::vector<Rational> values(entries);
  const unsigned threads =
      std::max(1u, std::min(options.threads, spec.k() == 1 ? 1u : q + 1));
  if (threads == 1) {
    TensorBuilder(spec, q, sign, values).run_level0_subset(0, 1);
  } else {
    // Each worker owns a residue class of the innermost index, so writes
    // never overlap.
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        TensorBuilder(spec, q, sign, values).run_level0_subset(t, threads);
      });
    }
    for (auto& th : pool) th.join();
  }
  return CoeffTensor(spec, q, options.convention, std::move(values));
}

double scale_coeff(const Rational& bar, const KernelSpec& spec,
                   const MultiIndex& j, double dt, Convention convention) {
  if (!(dt > 0)) throw std::invalid_argument("interval length must be positive");
  const unsigned s = spec.weight_sum();
  const unsigned k = spec.k();
  double v = std::pow(dt, s + 0.5 * k) / std::ldexp(1.0, static_cast<int>(s + k));
  for (unsigned jr : j) v *= std::sqrt(2.0 * jr + 1.0);
  v *= to_double(bar);
  if (convention == Convention::kUnsigned && odd(s)) v = -v;
  return v;
}

ScaledTensor::ScaledTensor(KernelSpec spec, unsigned extent, double dt,
                           std::vector<double> values)
    : spec_(std::move(spec)),
      extent_(extent),
      dt_(dt),
      values_(std::move(values)) {}

std::size_t ScaledTensor::linear_index(const MultiIndex& j) const {
  std::size_t idx = 0;
  for (std::size_t r = j.size(); r-- > 0;) idx = idx * extent_ + j[r];
  return idx;
}

double ScaledTensor::at(const MultiIndex& j) const {
  return values_.at(linear_index(j));
}

ScaledTensor scale(const CoeffTensor& tensor, double dt) {
  std::vector<double> v(tensor.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = scale_coeff(tensor.at_linear(i), tensor.spec(),
                       tensor.multi_index(i), dt, tensor.convention());
  }
  return ScaledTensor(tensor.spec(), tensor.extent(), dt, std::move(v));
}

}  // namespace isi
