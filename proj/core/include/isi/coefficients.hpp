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

// Exact Fourier-Legendre coefficients of the simplex kernel
//
//   K(t_1..t_k) = prod_r (t - t_r)^{l_r} * 1{t_1 < ... < t_k}
//
// On [-1, 1] the coefficient of P_{j_1}(x_1)...P_{j_k}(x_k) is the nested
// integral of (1+x_r)^{l_r} P_{j_r}(x_r) over the simplex, with x_1
// innermost. Multi-indices are therefore listed innermost first.

#ifndef ISI_COEFFICIENTS_HPP_
#define ISI_COEFFICIENTS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "isi/rational.hpp"

namespace isi {

using MultiIndex = std::vector<unsigned>;

// Multiplicity k = weights.size() (1..5); weights[r] is the power of (t - s)
// on the r-th variable counted from the innermost.
struct KernelSpec {
  std::vector<unsigned> weights;

  static KernelSpec unweighted(unsigned k);

  unsigned k() const { return static_cast<unsigned>(weights.size()); }
  unsigned weight_sum() const;
  // Throws std::invalid_argument unless 1 <= k <= 5.
  void validate() const;
  std::string label() const;  // e.g. "0,0,1"

  friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

// kSigned folds the factor (-1)^{sum l} into the coefficient, as the weighted
// tables do; kUnsigned is the bare nested integral of (1+x)^l P_j.
enum class Convention { kSigned, kUnsigned };

Rational bar_coeff(const KernelSpec& spec, const MultiIndex& j,
                   Convention convention = Convention::kSigned);

struct TensorOptions {
  std::size_t max_entries = 10'000'000;
  unsigned threads = 1;
  Convention convention = Convention::kSigned;
};

// Dense (q+1)^k table of exact coefficients; j_1 varies fastest.
class CoeffTensor {
 public:
  CoeffTensor(KernelSpec spec, unsigned q, Convention convention,
              std::vector<Rational> values);

  const KernelSpec& spec() const { return spec_; }
  unsigned q() const { return q_; }
  unsigned extent() const { return q_ + 1; }
  Convention convention() const { return convention_; }
  std::size_t size() const { return values_.size(); }

  const Rational& at(const MultiIndex& j) const;
  const Rational& at_linear(std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t linear_index(const MultiIndex& j) const;
  MultiIndex multi_index(std::size_t linear) const;

 private:
  KernelSpec spec_;
  unsigned q_;
  Convention convention_;
  std::vector<Rational> values_;
};

// Throws ResourceLimitError when (q+1)^k exceeds options.max_entries.
CoeffTensor coeff_tensor(const KernelSpec& spec, unsigned q,
                         const TensorOptions& options = {});

// Converts one exact coefficient to the coefficient on [t, t+dt] for the
// orthonormal Legendre system. This is the only place floats appear.
double scale_coeff(const Rational& bar, const KernelSpec& spec,
                   const MultiIndex& j, double dt,
                   Convention convention = Convention::kSigned);

// Real-valued coefficient table used by the expansions. extent() basis
// functions per dimension; j_1 varies fastest.
class ScaledTensor {
 public:
  ScaledTensor(KernelSpec spec, unsigned extent, double dt,
               std::vector<double> values);

  const KernelSpec& spec() const { return spec_; }
  unsigned k() const { return spec_.k(); }
  unsigned extent() const { return extent_; }
  double dt() const { return dt_; }
  const std::vector<double>& values() const { return values_; }
  double at(const MultiIndex& j) const;
  std::size_t linear_index(const MultiIndex& j) const;

 private:
  KernelSpec spec_;
  unsigned extent_;
  double dt_;
  std::vector<double> values_;
};

ScaledTensor scale(const CoeffTensor& tensor, double dt);

}  // namespace isi

#endif  // ISI_COEFFICIENTS_HPP_
