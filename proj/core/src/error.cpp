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

#include "isi/error.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "isi/polynomial.hpp"

namespace isi {
namespace {

// Coefficients on a common denominator so the inner loop is integer-only.
struct IntegerTable {
  std::vector<BigInt> num;
  BigInt den = 1;
};

IntegerTable common_denominator(const CoeffTensor& t) {
  IntegerTable out;
  for (const Rational& v : t.values()) {
    if (v != 0) mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(),
                        v.get_den_mpz_t());
  }
  out.num.reserve(t.size());
  for (const Rational& v : t.values()) {
    out.num.push_back(v.get_num() * (out.den / v.get_den()));
  }
  return out;
}

unsigned long index_weight(const MultiIndex& j) {
  unsigned long w = 1;
  for (unsigned x : j) w *= 2ul * x + 1;
  return w;
}

// sum_{j in set} prod(2j+1) C-bar_j sum_s C-bar_{s(j)}, divided by
// 4^{sum l + k}: the dt-free part of sum C_j sum_s C_{s(j)}.
Rational correlation_sum(const CoeffTensor& t, const EqualityPattern& pattern,
                         const std::vector<MultiIndex>* index_set) {
  if (pattern.k() != t.spec().k()) {
    throw std::invalid_argument("pattern length differs from multiplicity");
  }
  const IntegerTable table = common_denominator(t);
  const auto sym = pattern.symmetries();
  BigInt total = 0;
  BigInt inner;
  MultiIndex permuted(t.spec().k());
  auto visit = [&](const MultiIndex& j, std::size_t linear) {
    const BigInt& nj = table.num[linear];
    if (nj == 0) return;
    inner = 0;
    for (const auto& s : sym) {
      for (unsigned r = 0; r < j.size(); ++r) permuted[r] = j[s[r]];
      inner += table.num[t.linear_index(permuted)];
    }
    total += nj * inner * index_weight(j);
  };
  if (index_set) {
    std::set<MultiIndex> seen;
    for (const MultiIndex& j : *index_set) {
      if (!seen.insert(j).second) continue;
      visit(j, t.linear_index(j));
    }
  } else {
    for (std::size_t i = 0; i < t.size(); ++i) visit(t.multi_index(i), i);
  }
  const unsigned shift = 2 * (t.spec().weight_sum() + t.spec().k());
  BigInt den = table.den * table.den;
  den <<= shift;
  Rational out(total, den);
  out.canonicalize();
  return out;
}

double dt_power(const KernelSpec& spec, double dt) {
  return std::pow(dt, 2.0 * spec.weight_sum() + spec.k());
}

}  // namespace

Rational kernel_norm_unit(const KernelSpec& spec) {
  spec.validate();
  BigInt den = 1;
  unsigned acc = 0;
  for (unsigned r = 0; r < spec.k(); ++r) {
    acc += spec.weights[r];
    den *= 2 * acc + r + 1;
  }
  Rational out(BigInt(1), den);
  out.canonicalize();
  return out;
}

Rational kernel_norm_by_integration(const KernelSpec& spec) {
  spec.validate();
  // On the unit simplex the squared weight of variable r is u^{2 l_r}.
  RatPoly f = RatPoly::constant(1);
  for (unsigned w : spec.weights) {
    f = antiderivative(f * RatPoly::monomial(1, 2 * w));
  }
  return f(Rational(1));
}

double kernel_norm(const KernelSpec& spec, double dt) {
  return to_double(kernel_norm_unit(spec)) * dt_power(spec, dt);
}

Rational exact_error_unit(const CoeffTensor& tensor,
                          const EqualityPattern& pattern) {
  return kernel_norm_unit(tensor.spec()) -
         correlation_sum(tensor, pattern, nullptr);
}

Rational exact_error_unit_over(const CoeffTensor& tensor,
                               const EqualityPattern& pattern,
                               const std::vector<MultiIndex>& index_set) {
  return kernel_norm_unit(tensor.spec()) -
         correlation_sum(tensor, pattern, &index_set);
}

double exact_error(const CoeffTensor& tensor, const EqualityPattern& pattern,
                   double dt) {
  return to_double(exact_error_unit(tensor, pattern)) *
         dt_power(tensor.spec(), dt);
}

double exact_error(const ScaledTensor& tensor, const EqualityPattern& pattern,
                   const Rational& kernel_norm_unit_value) {
  if (pattern.k() != tensor.k()) {
    throw std::invalid_argument("pattern length differs from multiplicity");
  }
  const auto sym = pattern.symmetries();
  const auto& v = tensor.values();
  const unsigned k = tensor.k();
  const unsigned e = tensor.extent();
  MultiIndex j(k, 0);
  MultiIndex permuted(k);
  // Neumaier-compensated sum.
  double sum = 0;
  double comp = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t rest = i;
    for (unsigned r = 0; r < k; ++r) {
      j[r] = static_cast<unsigned>(rest % e);
      rest /= e;
    }
    if (v[i] == 0) continue;
    double inner = 0;
    for (const auto& s : sym) {
      for (unsigned r = 0; r < k; ++r) permuted[r] = j[s[r]];
      inner += v[tensor.linear_index(permuted)];
    }
    const double term = v[i] * inner;
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term
                                            : (term - t) + sum;
    sum = t;
  }
  return to_double(kernel_norm_unit_value) *
             dt_power(tensor.spec(), tensor.dt()) -
         (sum + comp);
}

std::vector<MultiIndex> band_support(unsigned q) {
  std::vector<MultiIndex> out;
  for (unsigned i = 0; i <= q; ++i) {
    out.push_back({i, i});
    out.push_back({i, i + 2});
    out.push_back({i + 2, i});
  }
  for (unsigned i = 1; i <= std::max(q, 1u); ++i) {
    out.push_back({i - 1, i});
    out.push_back({i, i - 1});
  }
  return out;
}

Rational error_bound_unit(const CoeffTensor& tensor) {
  const Rational gap =
      kernel_norm_unit(tensor.spec()) -
      correlation_sum(tensor, EqualityPattern::distinct(tensor.spec().k()),
                      nullptr);
  BigInt fact = 1;
  for (unsigned r = 2; r <= tensor.spec().k(); ++r) fact *= r;
  return gap * Rational(fact);
}

double error_bound(const CoeffTensor& tensor, double dt) {
  return to_double(error_bound_unit(tensor)) * dt_power(tensor.spec(), dt);
}

ErrorReport error_report(const CoeffTensor& tensor,
                         const EqualityPattern& pattern, double dt) {
  ErrorReport r;
  r.exact = exact_error(tensor, pattern, dt);
  r.bound = error_bound(tensor, dt);
  r.kernel_norm = kernel_norm(tensor.spec(), dt);
  return r;
}

}  // namespace isi
