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

#ifndef ISI_RATIONAL_HPP_
#define ISI_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace isi {

// Exact fraction. GMP keeps it canonical: lowest terms, positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

// Always "p/q", integers included ("-2/1"), so readers never guess the format.
std::string to_fraction_string(const Rational& r);

// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_fraction(std::string_view text);

// Correctly rounded to nearest double (mpq_get_d truncates).
double to_double(const Rational& r);

}  // namespace isi

#endif  // ISI_RATIONAL_HPP_
