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

#include "isi/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace isi {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s, 10));
    Rational r(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a fraction: '" + s + "'");
  }
}

double to_double(const Rational& r) {
  const double d = r.get_d();  // truncated toward zero
  if (!std::isfinite(d)) return d;
  const double away =
      std::nextafter(d, r >= 0 ? std::numeric_limits<double>::infinity()
                               : -std::numeric_limits<double>::infinity());
  const Rational err_d = abs(r - Rational(d));
  const Rational err_a = abs(r - Rational(away));
  return err_a < err_d ? away : d;
}

}  // namespace isi
