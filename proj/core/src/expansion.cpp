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

#include "isi/expansion.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace isi {
namespace {

using boost::multiprecision::cpp_bin_float_50;

// A partial pairing of equal-component positions: paired (a, b) positions
// contribute -1{j_a = j_b}, the rest contribute their Gaussian factor.
struct Pairing {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  std::vector<unsigned> free;
};

void enumerate_pairings(const IndexPattern& p, std::vector<bool>& used,
                        unsigned start, Pairing& cur,
                        std::vector<Pairing>& out) {
  unsigned a = start;
  while (a < p.k() && used[a]) ++a;
  if (a >= p.k()) {
    Pairing done = cur;
    for (unsigned r = 0; r < p.k(); ++r) {
      bool in_pair = false;
      for (const auto& [x, y] : done.pairs) in_pair |= (x == r || y == r);
      if (!in_pair) done.free.push_back(r);
    }
    out.push_back(std::move(done));
    return;
  }
  // Position a stays unpaired.
  used[a] = true;
  enumerate_pairings(p, used, a + 1, cur, out);
  // Or pairs with a later unused position on the same component.
  for (unsigned b = a + 1; b < p.k(); ++b) {
    if (used[b] || p.components[b] != p.components[a]) continue;
    used[b] = true;
    cur.pairs.emplace_back(a, b);
    enumerate_pairings(p, used, a + 1, cur, out);
    cur.pairs.pop_back();
    used[b] = false;
  }
  used[a] = false;
}

std::vector<Pairing> pairings(const IndexPattern& p) {
  std::vector<Pairing> out;
  std::vector<bool> used(p.k(), false);
  Pairing cur;
  enumerate_pairings(p, used, 0, cur, out);
  return out;
}

void check_dims(const ScaledTensor& c, const IndexPattern& pattern,
                const NoiseDraws& draws, unsigned q) {
  pattern.validate();
  if (pattern.k() != c.k()) {
    throw std::invalid_argument("pattern length differs from multiplicity");
  }
  if (q + 1 > c.extent()) {
    throw std::invalid_argument("truncation exceeds coefficient table");
  }
  if (q > draws.q_max()) {
    throw std::invalid_argument("truncation exceeds Gaussian table");
  }
  if (pattern.max_component() > draws.m()) {
    throw std::invalid_argument("component label exceeds Gaussian table");
  }
}

// Sums term(j) * C_j over j in {0..q}^k, iterating the multi-index in place.
template <typename Term>
double sum_over_cube(const ScaledTensor& c, unsigned q, Term&& term) {
  const unsigned k = c.k();
  std::vector<std::size_t> stride(k, 1);
  for (unsigned r = 1; r < k; ++r) stride[r] = stride[r - 1] * c.extent();
  std::vector<unsigned> j(k, 0);
  std::size_t linear = 0;
  const std::vector<double>& v = c.values();
  double sum = 0;
  while (true) {
    const double coeff = v[linear];
    if (coeff != 0) sum += coeff * term(j);
    unsigned r = 0;
    while (r < k && j[r] == q) {
      linear -= j[r] * stride[r];
      j[r] = 0;
      ++r;
    }
    if (r == k) break;
    ++j[r];
    linear += stride[r];
  }
  return sum;
}

void check_draws(const NoiseDraws& draws, unsigned i, unsigned need) {
  if (i == 0 || i > draws.m()) {
    throw std::invalid_argument("component label outside Gaussian table");
  }
  if (need > draws.q_max()) {
    throw std::invalid_argument("Gaussian table too short: needs index " +
                                std::to_string(need));
  }
}

double zeta_of(const NoiseDraws& d, unsigned i, unsigned j) {
  return d.zeta(i, j);
}

// Stratonovich double series, unit weights per (l1, l2), as printed.
double s00(unsigned a, unsigned b, const NoiseDraws& d, unsigned q, double dt) {
  double sum = zeta_of(d, a, 0) * zeta_of(d, b, 0);
  for (unsigned i = 1; i <= q; ++i) {
    sum += (zeta_of(d, a, i - 1) * zeta_of(d, b, i) -
            zeta_of(d, a, i) * zeta_of(d, b, i - 1)) /
           std::sqrt(4.0 * i * i - 1.0);
  }
  return dt / 2 * sum;
}

double s01(unsigned a, unsigned b, const NoiseDraws& d, unsigned q, double dt) {
  double sum = zeta_of(d, a, 0) * zeta_of(d, b, 1) / std::sqrt(3.0);
  for (unsigned n = 0; n <= q; ++n) {
    const double i = n;
    sum += ((i + 2) * zeta_of(d, a, n) * zeta_of(d, b, n + 2) -
            (i + 1) * zeta_of(d, a, n + 2) * zeta_of(d, b, n)) /
               (std::sqrt((2 * i + 1) * (2 * i + 5)) * (2 * i + 3)) -
           zeta_of(d, a, n) * zeta_of(d, b, n) / ((2 * i - 1) * (2 * i + 3));
  }
  return -dt / 2 * s00(a, b, d, q, dt) - dt * dt / 4 * sum;
}

double s10(unsigned a, unsigned b, const NoiseDraws& d, unsigned q, double dt) {
  double sum = zeta_of(d, b, 0) * zeta_of(d, a, 1) / std::sqrt(3.0);
  for (unsigned n = 0; n <= q; ++n) {
    const double i = n;
    sum += ((i + 1) * zeta_of(d, b, n + 2) * zeta_of(d, a, n) -
            (i + 2) * zeta_of(d, b, n) * zeta_of(d, a, n + 2)) /
               (std::sqrt((2 * i + 1) * (2 * i + 5)) * (2 * i + 3)) +
           zeta_of(d, a, n) * zeta_of(d, b, n) / ((2 * i - 1) * (2 * i + 3));
  }
  return -dt / 2 * s00(a, b, d, q, dt) - dt * dt / 4 * sum;
}

// Cross terms (i, i+3) and (i, i+1) shared by the weight-two series; the
// numerators differ between (0,2), (2,0) and (1,1).
double weight2_sum(unsigned a, unsigned b, const NoiseDraws& d, unsigned q,
                   double (*up3)(double), double (*down3)(double),
                   double (*up1)(double), double (*down1)(double)) {
  double sum = 0;
  for (unsigned n = 0; n <= q; ++n) {
    const double i = n;
    sum += (up3(i) * zeta_of(d, b, n + 3) * zeta_of(d, a, n) -
            down3(i) * zeta_of(d, b, n) * zeta_of(d, a, n + 3)) /
               (std::sqrt((2 * i + 1) * (2 * i + 7)) * (2 * i + 3) *
                (2 * i + 5)) +
           (up1(i) * zeta_of(d, b, n + 1) * zeta_of(d, a, n) -
            down1(i) * zeta_of(d, b, n) * zeta_of(d, a, n + 1)) /
               (std::sqrt((2 * i + 1) * (2 * i + 3)) * (2 * i - 1) *
                (2 * i + 5));
  }
  return sum;
}

double s02(unsigned a, unsigned b, const NoiseDraws& d, unsigned q, double dt) {
  const double head = 2.0 / (3.0 * std::sqrt(5.0)) * zeta_of(d, b, 2) *
                          zeta_of(d, a, 0) +
                      zeta_of(d, a, 0) * zeta_of(d, b, 0) / 3.0;
  const double tail = weight2_sum(
      a, b, d, q, [](double i) { return (i + 2) * (i + 3); },
      [](double i) { return (i + 1) * (i + 2); },
      [](double i) { return i * i + i - 3; },
      [](double i) { return i * i + 3 * i - 1; });
  return -dt * dt / 4 * s00(a, b, d, q, dt) - dt * s01(a, b, d, q, dt) +
         dt * dt * dt / 8 * (head + tail);
}

double s20(unsigned a, unsigned b, const NoiseDraws& d, unsigned q, double dt) {
  const double head = 2.0 / (3.0 * std::sqrt(5.0)) * zeta_of(d, b, 0) *
                          zeta_of(d, a, 2) +
                      zeta_of(d, a, 0) * zeta_of(d, b, 0) / 3.0;
  const double tail = weight2_sum(
      a, b, d, q, [](double i) { return (i + 1) * (i + 2); },
      [](double i) { return (i + 2) * (i + 3); },
      [](double i) { return i * i + 3 * i - 1; },
      [](double i) { return i * i + i - 3; });
  return -dt * dt / 4 * s00(a, b, d, q, dt) - dt * s10(a, b, d, q, dt) +
         dt * dt * dt / 8 * (head + tail);
}

double s11(unsigned a, unsigned b, const NoiseDraws& d, unsigned q, double dt) {
  const double head = zeta_of(d, a, 1) * zeta_of(d, b, 1) / 3.0;
  const double tail = weight2_sum(
      a, b, d, q, [](double i) { return (i + 1) * (i + 3); },
      [](double i) { return (i + 1) * (i + 3); },
      [](double i) { return (i + 1) * (i + 1); },
      [](double i) { return (i + 1) * (i + 1); });
  return -dt * dt / 4 * s00(a, b, d, q, dt) -
         dt / 2 * (s10(a, b, d, q, dt) + s01(a, b, d, q, dt)) +
         dt * dt * dt / 8 * (head + tail);
}

// Ito minus Stratonovich for a double integral with equal components.
double double_correction(unsigned l1, unsigned l2, double dt) {
  const unsigned s = l1 + l2;
  if (s == 0) return -dt / 2;
  if (s == 1) return dt * dt / 4;
  return -dt * dt * dt / 6;
}

bool supported_double(unsigned l1, unsigned l2) {
  return (l1 + l2 <= 2) && !(l1 == 2 && l2 != 0) && !(l2 == 2 && l1 != 0);
}

double strat_double(unsigned l1, unsigned l2, unsigned a, unsigned b,
                    const NoiseDraws& d, unsigned q, double dt) {
  if (l1 == 0 && l2 == 0) return s00(a, b, d, q, dt);
  if (l1 == 0 && l2 == 1) return s01(a, b, d, q, dt);
  if (l1 == 1 && l2 == 0) return s10(a, b, d, q, dt);
  if (l1 == 0 && l2 == 2) return s02(a, b, d, q, dt);
  if (l1 == 2 && l2 == 0) return s20(a, b, d, q, dt);
  if (l1 == 1 && l2 == 1) return s11(a, b, d, q, dt);
  throw std::invalid_argument("unsupported weight pair for double series");
}

double tail_sum(unsigned q, int power, const cpp_bin_float_50& total) {
  cpp_bin_float_50 s = total;
  for (unsigned r = 1; r <= q; ++r) {
    s -= cpp_bin_float_50(1) / pow(cpp_bin_float_50(r), power);
  }
  return s.convert_to<double>();
}

}  // namespace

NoiseDraws::NoiseDraws(unsigned m, unsigned q_max, std::vector<double> zeta,
                       std::vector<double> xi, std::vector<double> mu,
                       std::uint64_t seed)
    : m_(m),
      q_max_(q_max),
      zeta_(std::move(zeta)),
      xi_(std::move(xi)),
      mu_(std::move(mu)),
      seed_(seed) {
  if (m_ == 0) throw std::invalid_argument("need at least one component");
  if (zeta_.size() != static_cast<std::size_t>(m_) * (q_max_ + 1)) {
    throw std::invalid_argument("zeta table has the wrong size");
  }
  if (!xi_.empty() && (xi_.size() != m_ || mu_.size() != m_)) {
    throw std::invalid_argument("tail tables need one entry per component");
  }
}

double NoiseDraws::zeta(unsigned i, unsigned j) const {
  if (i == 0 || i > m_ || j > q_max_) {
    throw std::out_of_range("zeta(" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside table");
  }
  return zeta_[static_cast<std::size_t>(i - 1) * (q_max_ + 1) + j];
}

const double* NoiseDraws::zeta_row(unsigned i) const {
  if (i == 0 || i > m_) throw std::out_of_range("component outside table");
  return zeta_.data() + static_cast<std::size_t>(i - 1) * (q_max_ + 1);
}

double NoiseDraws::xi(unsigned i) const {
  if (xi_.empty()) throw std::invalid_argument("draws carry no tail normals");
  return xi_.at(i - 1);
}

double NoiseDraws::mu(unsigned i) const {
  if (mu_.empty()) throw std::invalid_argument("draws carry no tail normals");
  return mu_.at(i - 1);
}

NoiseDraws draw_noise(unsigned q_max, unsigned m, std::uint64_t seed,
                      bool with_tails) {
  if (m == 0) throw std::invalid_argument("need at least one component");
  std::vector<double> zeta;
  std::vector<double> xi;
  std::vector<double> mu;
  zeta.reserve(static_cast<std::size_t>(m) * (q_max + 1));
  for (unsigned i = 1; i <= m; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32), i};
    std::mt19937_64 engine(seq);
    std::normal_distribution<double> normal;
    for (unsigned j = 0; j <= q_max; ++j) zeta.push_back(normal(engine));
    if (with_tails) {
      xi.push_back(normal(engine));
      mu.push_back(normal(engine));
    }
  }
  return NoiseDraws(m, q_max, std::move(zeta), std::move(xi), std::move(mu),
                    seed);
}

double strat_expansion(const ScaledTensor& c, const IndexPattern& pattern,
                       const NoiseDraws& draws, unsigned q) {
  check_dims(c, pattern, draws, q);
  std::vector<const double*> rows;
  for (unsigned comp : pattern.components) rows.push_back(draws.zeta_row(comp));
  return sum_over_cube(c, q, [&](const std::vector<unsigned>& j) {
    double p = 1;
    for (unsigned r = 0; r < j.size(); ++r) p *= rows[r][j[r]];
    return p;
  });
}

double ito_expansion(const ScaledTensor& c, const IndexPattern& pattern,
                     const NoiseDraws& draws, unsigned q) {
  check_dims(c, pattern, draws, q);
  std::vector<const double*> rows;
  for (unsigned comp : pattern.components) rows.push_back(draws.zeta_row(comp));
  const std::vector<Pairing> terms = pairings(pattern);
  return sum_over_cube(c, q, [&](const std::vector<unsigned>& j) {
    double total = 0;
    for (const Pairing& t : terms) {
      bool hit = true;
      for (const auto& [a, b] : t.pairs) hit &= (j[a] == j[b]);
      if (!hit) continue;
      double p = (t.pairs.size() % 2 == 0) ? 1.0 : -1.0;
      for (unsigned r : t.free) p *= rows[r][j[r]];
      total += p;
    }
    return total;
  });
}

double expansion(const ScaledTensor& c, const IndexPattern& pattern,
                 const NoiseDraws& draws, unsigned q, Calculus calculus) {
  return calculus == Calculus::kIto ? ito_expansion(c, pattern, draws, q)
                                    : strat_expansion(c, pattern, draws, q);
}

double legendre_closed_single(unsigned l, unsigned i, const NoiseDraws& draws,
                              double dt) {
  if (l > 3) throw std::invalid_argument("closed single forms cover l <= 3");
  check_draws(draws, i, l);
  auto z = [&](unsigned j) { return draws.zeta(i, j); };
  switch (l) {
    case 0:
      return std::sqrt(dt) * z(0);
    case 1:
      return -std::pow(dt, 1.5) / 2 * (z(0) + z(1) / std::sqrt(3.0));
    case 2:
      return std::pow(dt, 2.5) / 3 *
             (z(0) + std::sqrt(3.0) / 2 * z(1) + z(2) / (2 * std::sqrt(5.0)));
    default:
      return -std::pow(dt, 3.5) / 4 *
             (z(0) + 3 * std::sqrt(3.0) / 5 * z(1) + z(2) / std::sqrt(5.0) +
              z(3) / (5 * std::sqrt(7.0)));
  }
}

double legendre_double_series(unsigned l1, unsigned l2, unsigned i1,
                              unsigned i2, const NoiseDraws& draws, unsigned q,
                              double dt, Calculus calculus) {
  if (!supported_double(l1, l2)) {
    throw std::invalid_argument("unsupported weight pair for double series");
  }
  check_draws(draws, i1, q + 3);
  check_draws(draws, i2, q + 3);
  double v = strat_double(l1, l2, i1, i2, draws, q, dt);
  if (calculus == Calculus::kIto && i1 == i2) {
    // The truncated Ito form replaces each zeta_j^2 by zeta_j^2 - 1, that is
    // it subtracts the trace of the quadratic form. Q(e_j) is its j-th
    // diagonal entry.
    const unsigned n = q + 4;
    for (unsigned j = 0; j < n; ++j) {
      std::vector<double> unit(static_cast<std::size_t>(i1) * n, 0.0);
      unit[static_cast<std::size_t>(i1 - 1) * n + j] = 1;
      v -= strat_double(l1, l2, i1, i1, NoiseDraws(i1, n - 1, std::move(unit)),
                        q, dt);
    }
  }
  return v;
}

double hermite_diagonal(unsigned k, unsigned l, unsigned i,
                        const NoiseDraws& draws, double dt, Calculus calculus) {
  if (k != 3 && k != 4) {
    throw std::invalid_argument("diagonal closed forms cover k = 3, 4");
  }
  const double x = legendre_closed_single(l, i, draws, dt);
  const double delta = std::pow(dt, 2 * l + 1) / (2 * l + 1);
  if (k == 3) {
    return calculus == Calculus::kIto ? (x * x * x - 3 * x * delta) / 6
                                      : x * x * x / 6;
  }
  const double x2 = x * x;
  return calculus == Calculus::kIto
             ? (x2 * x2 - 6 * x2 * delta + 3 * delta * delta) / 24
             : x2 * x2 / 24;
}

double ito_strat_convert(double value, const KernelSpec& spec,
                         const IndexPattern& pattern, const NoiseDraws& draws,
                         unsigned q, double dt,
                         ConversionDirection direction) {
  pattern.validate();
  if (pattern.k() != spec.k()) {
    throw std::invalid_argument("pattern length differs from multiplicity");
  }
  const auto& c = pattern.components;
  double corr = 0;  // Ito minus Stratonovich
  if (spec.k() == 2) {
    if (!supported_double(spec.weights[0], spec.weights[1])) {
      throw std::invalid_argument("no printed conversion for these weights");
    }
    if (c[0] == c[1]) corr = double_correction(spec.weights[0], spec.weights[1], dt);
  } else if (spec.k() == 3 && spec.weight_sum() == 0) {
    if (c[0] == c[1]) corr += 0.5 * legendre_closed_single(1, c[2], draws, dt);
    if (c[1] == c[2]) {
      corr -= 0.5 * (dt * legendre_closed_single(0, c[0], draws, dt) +
                     legendre_closed_single(1, c[0], draws, dt));
    }
  } else if (spec.k() == 4 && spec.weight_sum() == 0) {
    auto strat = [&](unsigned l1, unsigned l2, unsigned a, unsigned b) {
      return legendre_double_series(l1, l2, a, b, draws, q, dt,
                                    Calculus::kStratonovich);
    };
    if (c[0] == c[1]) corr += 0.5 * strat(1, 0, c[2], c[3]);
    if (c[1] == c[2]) corr -= 0.5 * (strat(1, 0, c[0], c[3]) - strat(0, 1, c[0], c[3]));
    if (c[2] == c[3]) corr -= 0.5 * (dt * strat(0, 0, c[0], c[1]) + strat(0, 1, c[0], c[1]));
    if (c[0] == c[1] && c[2] == c[3]) corr += dt * dt / 8;
  } else {
    throw std::invalid_argument("no printed conversion for this integral");
  }
  return direction == ConversionDirection::kStratToIto ? value + corr
                                                       : value - corr;
}

std::optional<TrigForm> parse_trig_form(const std::string& name) {
  for (TrigForm f : {TrigForm::kSingle1, TrigForm::kSingle1Tail,
                     TrigForm::kSingle2, TrigForm::kSingle2Tail,
                     TrigForm::kDouble, TrigForm::kDoubleTail}) {
    if (trig_form_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string trig_form_name(TrigForm form) {
  switch (form) {
    case TrigForm::kSingle1: return "single-1";
    case TrigForm::kSingle1Tail: return "single-1-tail";
    case TrigForm::kSingle2: return "single-2";
    case TrigForm::kSingle2Tail: return "single-2-tail";
    case TrigForm::kDouble: return "double";
    case TrigForm::kDoubleTail: return "double-tail";
  }
  return "";
}

double trig_alpha(unsigned q) {
  static const cpp_bin_float_50 kZeta2 =
      boost::math::constants::pi<cpp_bin_float_50>() *
      boost::math::constants::pi<cpp_bin_float_50>() / 6;
  return tail_sum(q, 2, kZeta2);
}

double trig_beta(unsigned q) {
  static const cpp_bin_float_50 kZeta4 =
      pow(boost::math::constants::pi<cpp_bin_float_50>(), 4) / 90;
  return tail_sum(q, 4, kZeta4);
}

double trig_milstein(TrigForm form, unsigned i1, unsigned i2,
                     const NoiseDraws& draws, unsigned q, double dt) {
  const bool tails = form == TrigForm::kSingle1Tail ||
                     form == TrigForm::kSingle2Tail ||
                     form == TrigForm::kDoubleTail;
  if (tails && !draws.has_tails()) {
    throw std::invalid_argument("tail form requested without tail normals");
  }
  constexpr double kPi = std::numbers::pi;
  const double sqrt2 = std::sqrt(2.0);
  check_draws(draws, i1, 2 * q);
  auto odd_sum = [&](unsigned i) {  // sum zeta_{2r-1} / r
    double s = 0;
    for (unsigned r = 1; r <= q; ++r) s += draws.zeta(i, 2 * r - 1) / r;
    return s;
  };
  switch (form) {
    case TrigForm::kSingle1:
    case TrigForm::kSingle1Tail: {
      double s = odd_sum(i1);
      if (tails) s += std::sqrt(trig_alpha(q)) * draws.xi(i1);
      return -std::pow(dt, 1.5) / 2 * (draws.zeta(i1, 0) - sqrt2 / kPi * s);
    }
    case TrigForm::kSingle2:
    case TrigForm::kSingle2Tail: {
      double even = 0;
      for (unsigned r = 1; r <= q; ++r) {
        even += draws.zeta(i1, 2 * r) / (static_cast<double>(r) * r);
      }
      double odd = odd_sum(i1);
      if (tails) {
        even += std::sqrt(trig_beta(q)) * draws.mu(i1);
        odd += std::sqrt(trig_alpha(q)) * draws.xi(i1);
      }
      return std::pow(dt, 2.5) *
             (draws.zeta(i1, 0) / 3 + even / (sqrt2 * kPi * kPi) -
              odd / (sqrt2 * kPi));
    }
    case TrigForm::kDouble:
    case TrigForm::kDoubleTail: {
      check_draws(draws, i2, 2 * q);
      auto z1 = [&](unsigned j) { return draws.zeta(i1, j); };
      auto z2 = [&](unsigned j) { return draws.zeta(i2, j); };
      double s = 0;
      for (unsigned r = 1; r <= q; ++r) {
        s += (z1(2 * r) * z2(2 * r - 1) - z1(2 * r - 1) * z2(2 * r) +
              sqrt2 * (z1(2 * r - 1) * z2(0) - z1(0) * z2(2 * r - 1))) /
             r;
      }
      double v = z1(0) * z2(0) + s / kPi;
      if (tails) {
        v += sqrt2 / kPi * std::sqrt(trig_alpha(q)) *
             (draws.xi(i1) * z2(0) - z1(0) * draws.xi(i2));
      }
      return dt / 2 * v;
    }
  }
  throw std::invalid_argument("unknown trigonometric form");
}

}  // namespace isi
