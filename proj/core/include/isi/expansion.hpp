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

// Realized values of truncated expansions of iterated stochastic integrals.
//
// Every function here is a pure function of its arguments. Gaussian inputs
// come from a NoiseDraws table, which can be drawn from a seed or built from
// externally computed values (the Monte Carlo oracle does the latter).

#ifndef ISI_EXPANSION_HPP_
#define ISI_EXPANSION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isi/coefficients.hpp"
#include "isi/pattern.hpp"

namespace isi {

// zeta(i, j) for component i in 1..m and index j in 0..q_max, plus optional
// tail normals xi(i), mu(i) used by the trigonometric forms.
class NoiseDraws {
 public:
  NoiseDraws(unsigned m, unsigned q_max, std::vector<double> zeta,
             std::vector<double> xi = {}, std::vector<double> mu = {},
             std::uint64_t seed = 0);

  unsigned m() const { return m_; }
  unsigned q_max() const { return q_max_; }
  std::uint64_t seed() const { return seed_; }
  bool has_tails() const { return !xi_.empty(); }

  double zeta(unsigned i, unsigned j) const;
  double xi(unsigned i) const;
  double mu(unsigned i) const;
  // Row of component i, indices 0..q_max.
  const double* zeta_row(unsigned i) const;

 private:
  unsigned m_;
  unsigned q_max_;
  std::vector<double> zeta_;
  std::vector<double> xi_;
  std::vector<double> mu_;
  std::uint64_t seed_;
};

// Reproducible i.i.d. standard normals. Component i's row is drawn from its
// own stream, so enlarging m leaves earlier rows unchanged.
NoiseDraws draw_noise(unsigned q_max, unsigned m, std::uint64_t seed,
                      bool with_tails = false);

// Truncated multiple sum with the indicator corrections of the Ito form:
// sum over partial pairings of equal-component positions, each pair
// contributing -1{j_a = j_b} in place of two Gaussian factors.
double ito_expansion(const ScaledTensor& c, const IndexPattern& pattern,
                     const NoiseDraws& draws, unsigned q);

// Plain truncated product sum.
double strat_expansion(const ScaledTensor& c, const IndexPattern& pattern,
                       const NoiseDraws& draws, unsigned q);

double expansion(const ScaledTensor& c, const IndexPattern& pattern,
                 const NoiseDraws& draws, unsigned q, Calculus calculus);

// Exact finite Legendre forms of the single integral with weight (t-s)^l,
// l <= 3. Component i is 1-based.
double legendre_closed_single(unsigned l, unsigned i, const NoiseDraws& draws,
                              double dt);

// Printed double-integral series with infinity replaced by q. Weight pairs
// are (l1, l2) innermost first: (0,0), (1,0), (0,1), (2,0), (0,2), (1,1).
// The series reads zeta indices up to q+3. The Ito form with i1 = i2 drops
// the truncated trace, not its limit, matching the truncated error formulas.
double legendre_double_series(unsigned l1, unsigned l2, unsigned i1,
                              unsigned i2, const NoiseDraws& draws, unsigned q,
                              double dt, Calculus calculus);

// All components equal, k in {3, 4}, weight (t-s)^l on every variable.
double hermite_diagonal(unsigned k, unsigned l, unsigned i,
                        const NoiseDraws& draws, double dt, Calculus calculus);

enum class ConversionDirection { kStratToIto, kItoToStrat };

// Applies the pathwise Ito/Stratonovich correction for the supported
// integrals: k = 2 with weights in legendre_double_series' list, k = 3 and
// k = 4 unweighted. Lower-order integrals that appear in the correction are
// evaluated from the draws (double integrals at truncation q). Throws
// std::invalid_argument for other cases.
double ito_strat_convert(double value, const KernelSpec& spec,
                         const IndexPattern& pattern, const NoiseDraws& draws,
                         unsigned q, double dt, ConversionDirection direction);

// Trigonometric forms with the shared truncation q (index r = 1..q, zeta
// indices up to 2q). Tail kinds add the aggregated-tail normals and need
// draws with tails.
enum class TrigForm {
  kSingle1,      // weight (t-s), truncated
  kSingle1Tail,  // weight (t-s), with tail normal
  kSingle2,      // weight (t-s)^2, truncated
  kSingle2Tail,  // weight (t-s)^2, with both tail normals
  kDouble,       // unweighted double, truncated
  kDoubleTail,   // unweighted double, with tail term
};

std::optional<TrigForm> parse_trig_form(const std::string& name);
std::string trig_form_name(TrigForm form);

// i2 is ignored by the single forms.
double trig_milstein(TrigForm form, unsigned i1, unsigned i2,
                     const NoiseDraws& draws, unsigned q, double dt);

// pi^2/6 - sum_{r<=q} 1/r^2 and pi^4/90 - sum_{r<=q} 1/r^4, evaluated
// without cancellation.
double trig_alpha(unsigned q);
double trig_beta(unsigned q);

}  // namespace isi

#endif  // ISI_EXPANSION_HPP_
