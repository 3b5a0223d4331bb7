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

#ifndef ISI_POLYNOMIAL_HPP_
#define ISI_POLYNOMIAL_HPP_

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "isi/rational.hpp"

namespace isi {

// Dense univariate polynomial over the rationals; coeffs()[i] multiplies x^i.
// The zero polynomial has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, std::size_t power);
  // (1 + x)^n with binomial coefficients.
  static RatPoly one_plus_x_pow(unsigned n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Coefficient of x^i; zero past the degree.
  Rational coeff(std::size_t i) const;

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

RatPoly derivative(const RatPoly& p);

// Antiderivative with zero constant term.
RatPoly antiderivative(const RatPoly& p);

// Exact integral of p over [a, b].
Rational definite_integral(const RatPoly& p, const Rational& a,
                           const Rational& b);

}  // namespace isi

#endif  // ISI_POLYNOMIAL_HPP_
