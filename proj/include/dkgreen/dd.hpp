// SPDX-License-Identifier: Apache-2.0
//
// Compact double-double ("dd") arithmetic: an unevaluated sum of two doubles
// carrying ~31 significant digits.  Used internally by the special-function
// module, where the Tricomi connection formula cancels up to 13 digits and a
// plain double accumulation cannot meet the accuracy contracts.
//
// Algorithms are the classic error-free transformations (Dekker/Knuth) in the
// style of the QD library; products rely on FMA.

#ifndef DKGREEN_DD_HPP_
#define DKGREEN_DD_HPP_

#include <cmath>

namespace dkgreen {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  constexpr dd() = default;
  constexpr dd(double h) : hi(h), lo(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr dd(double h, double l) : hi(h), lo(l) {}

  explicit operator double() const { return hi + lo; }
};

namespace dd_detail {

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

// Requires |a| >= |b|.
inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace dd_detail

inline dd operator+(dd a, dd b) {
  using namespace dd_detail;
  dd s = two_sum(a.hi, b.hi);
  dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
  using namespace dd_detail;
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = a - dd(q1) * b;
  double q2 = r.hi / b.hi;
  r = r - dd(q2) * b;
  double q3 = r.hi / b.hi;
  dd q = dd_detail::quick_two_sum(q1, q2);
  return q + dd(q3);
}

inline dd& operator+=(dd& a, dd b) { return a = a + b; }
inline dd& operator-=(dd& a, dd b) { return a = a - b; }
inline dd& operator*=(dd& a, dd b) { return a = a * b; }
inline dd& operator/=(dd& a, dd b) { return a = a / b; }

inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd a, dd b) { return b < a; }
inline bool operator==(dd a, dd b) { return a.hi == b.hi && a.lo == b.lo; }

inline dd abs(dd a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline dd ldexp(dd a, int n) { return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)}; }

namespace dd_const {
inline constexpr dd pi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr dd ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr dd half_ln_2pi{0.9189385332046728, -3.8782941580672414e-17};
inline constexpr dd ln_pi{1.1447298858494002, 1.0265951162707826e-17};
}  // namespace dd_const

// Transcendentals (implemented in dd.cpp).  Domains match the double
// versions; arguments outside give inf/0 like std::exp / NaN like std::log.
dd exp(dd a);
dd log(dd a);                // a > 0
dd pow(dd a, dd b);          // a > 0
dd sinpi(dd a);              // sin(pi*a), exact integer reduction
dd lgamma_positive(dd x);    // ln Gamma(x), x > 0

// ln|Gamma(x)| and sign(Gamma(x)) for any non-pole real x.
struct DdLogGamma {
  dd log_abs;
  int sign;
};
DdLogGamma lgamma_signed(dd x);

// Gamma(x) as a dd, saturating to +/-inf near poles; |x| must be small
// enough that Gamma(x) is representable.
dd gamma_dd(dd x);

}  // namespace dkgreen

#endif  // DKGREEN_DD_HPP_
