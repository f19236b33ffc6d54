// SPDX-License-Identifier: Apache-2.0

#include "dkgreen/dd.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace dkgreen {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

dd exp(dd a) {
  if (a.hi > 709.0) return dd(kInf);
  if (a.hi < -745.0) return dd(0.0);

  // a = m*ln2 + r, then r is squeezed by 2^9 so the Taylor series needs
  // only ~10 terms for full dd accuracy.
  double m = std::floor(a.hi / dd_const::ln2.hi + 0.5);
  dd r = a - dd(m) * dd_const::ln2;
  r = ldexp(r, -9);

  // s = exp(r) - 1 by Taylor.
  dd s = r;
  dd term = r;
  for (int k = 2; k <= 12; ++k) {
    term = term * r / dd(static_cast<double>(k));
    s += term;
    if (std::abs(term.hi) < 1e-40 * std::abs(s.hi)) break;
  }
  // Undo the squeeze: exp(2r)-1 = 2(exp(r)-1) + (exp(r)-1)^2.
  for (int i = 0; i < 9; ++i) s = ldexp(s, 1) + s * s;
  dd result = s + dd(1.0);
  return ldexp(result, static_cast<int>(m));
}

dd log(dd a) {
  if (!(a.hi > 0.0)) return dd(std::numeric_limits<double>::quiet_NaN());
  // One Newton correction on top of the double log: with y0 accurate to
  // 1e-16, r = a*exp(-y0) - 1 is ~1e-16 and y0 + r - r^2/2 carries full dd
  // precision.
  dd y0(std::log(a.hi));
  dd r = a * exp(-y0) - dd(1.0);
  return y0 + r - ldexp(r * r, -1);
}

dd pow(dd a, dd b) { return exp(b * log(a)); }

dd sinpi(dd a) {
  // Reduce a = n + t with |t| <= 1/2; the subtraction is exact because n is
  // integral and within the double range where integers are exact.
  double n = std::floor(a.hi + 0.5);
  if (std::abs(a.hi) > 4.5e15) return dd(0.0);  // integer resolution exhausted
  dd t = a - dd(n);
  dd u = dd_const::pi * t;
  dd u2 = u * u;
  dd s = u;
  dd term = u;
  for (int k = 1; k <= 20; ++k) {
    term = -(term * u2) / dd(static_cast<double>(2 * k * (2 * k + 1)));
    s += term;
    if (std::abs(term.hi) < 1e-40 * std::abs(s.hi) + 1e-320) break;
  }
  bool flip = std::fmod(n, 2.0) != 0.0;
  return flip ? -s : s;
}

namespace {

// B_{2n} / (2n (2n-1)) for the Stirling series, n = 1..16.  Numerators and
// denominators of the Bernoulli rationals up to B_32 are exact doubles, so
// these dd divisions lose nothing.
const std::array<dd, 16>& stirling_coeffs() {
  static const std::array<dd, 16> coeffs = [] {
    constexpr double num[16] = {1.0, -1.0, 1.0, -1.0, 5.0, -691.0, 7.0,
                                -3617.0, 43867.0, -174611.0, 854513.0,
                                -236364091.0, 8553103.0, -23749461029.0,
                                8615841276005.0, -7709321041217.0};
    constexpr double den[16] = {6.0, 30.0, 42.0, 30.0, 66.0, 2730.0, 6.0,
                                510.0, 798.0, 330.0, 138.0, 2730.0, 6.0,
                                870.0, 14322.0, 510.0};
    std::array<dd, 16> c{};
    for (int n = 1; n <= 16; ++n) {
      double scale = static_cast<double>(2 * n) * (2 * n - 1);
      c[n - 1] = dd(num[n - 1]) / dd(den[n - 1] * scale);
    }
    return c;
  }();
  return coeffs;
}

// Stirling series; requires y >= 20 so the truncated tail is < 1e-32.
dd stirling_lgamma(dd y) {
  const auto& c = stirling_coeffs();
  dd inv = dd(1.0) / y;
  dd inv2 = inv * inv;
  dd p = inv;
  dd series(0.0);
  for (const dd& coeff : c) {
    series += coeff * p;
    p = p * inv2;
  }
  return (y - dd(0.5)) * log(y) - y + dd_const::half_ln_2pi + series;
}

}  // namespace

dd lgamma_positive(dd x) {
  if (x.hi >= 20.0) return stirling_lgamma(x);
  // Shift into Stirling territory: lnG(x) = lnG(x+m) - sum ln(x+j).
  int m = static_cast<int>(std::ceil(20.0 - x.hi));
  dd shift(0.0);
  for (int j = 0; j < m; ++j) shift += log(x + dd(static_cast<double>(j)));
  return stirling_lgamma(x + dd(static_cast<double>(m))) - shift;
}

DdLogGamma lgamma_signed(dd x) {
  if (x.hi > 0.0) return {lgamma_positive(x), 1};
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  dd s = sinpi(x);
  dd log_abs = dd_const::ln_pi - log(abs(s)) - lgamma_positive(dd(1.0) - x);
  int sign = (s.hi > 0.0) ? 1 : -1;
  return {log_abs, sign};
}

dd gamma_dd(dd x) {
  if (x.hi <= 0.0 && x == dd(std::floor(x.hi))) {
    return dd(kInf);  // pole; callers guard before getting here
  }
  DdLogGamma lg = lgamma_signed(x);
  dd g = exp(lg.log_abs);
  return lg.sign > 0 ? g : -g;
}

}  // namespace dkgreen
