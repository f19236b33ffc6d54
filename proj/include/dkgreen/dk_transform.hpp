// SPDX-License-Identifier: Apache-2.0
//
// Effective potential of a Duru-Kleinert coordinate transformation r = h(q):
//
//   V_eff(q) = -(rho hbar^2 / m) [ (1/4) h'''/h' - (3/8) (h''/h')^2 ]
//
// in natural units hbar = 1.  The engine accepts an arbitrary map with
// analytically supplied derivatives; the two maps the Coulomb chain uses
// (r = e^x and x = ln z) are provided as ready-made specs.

#ifndef DKGREEN_DK_TRANSFORM_HPP_
#define DKGREEN_DK_TRANSFORM_HPP_

#include <cstddef>
#include <functional>
#include <span>

namespace dkgreen::dk_transform {

using Map1D = std::function<double(double)>;

// A coordinate transformation r = h(q) with its first three derivatives and
// an open domain (q_min, q_max).  `f` optionally carries the space-time
// transformation function satisfying h'(q)^2 = f(h(q)).
struct TransformSpec {
  Map1D h;
  Map1D d1;
  Map1D d2;
  Map1D d3;
  double q_min;
  double q_max;
  Map1D f;  // may be empty

  bool contains(double q) const { return q > q_min && q < q_max; }

  static TransformSpec identity();
  // r = e^x on x in (-inf, inf); f(r) = r^2.
  static TransformSpec exponential();
  // x_O = ln z on z in (0, inf); f(x_O) = e^{-2 x_O}.
  static TransformSpec logarithmic();
};

// The reparameterization gauge: the fluctuating scale variable is pinned to
// a constant by the delta-gauge, so a plain number suffices.
struct GaugeChoice {
  double rho = 1.0;
};

// V_eff at q.  Throws DomainError outside the spec's domain and
// DegenerateMap where |h'(q)| vanishes.
double effective_potential(const TransformSpec& t, double q, double rho,
                           double mass);

// Cross-validation variant that differentiates h numerically (5-point
// stencils).  Roughly 6 digits; never used in the main chain.
double effective_potential_numeric(const Map1D& h, double q, double rho,
                                   double mass);

struct ConsistencyReport {
  double max_abs_deviation = 0.0;
  std::size_t worst_index = 0;
  double tolerance = 0.0;
  bool pass = false;
};

// Checks h'(q)^2 = f(h(q)) over the grid against `tol`.
ConsistencyReport verify_f_consistency(const TransformSpec& t, const Map1D& f,
                                       std::span<const double> q_grid,
                                       double tol = 1e-12);

}  // namespace dkgreen::dk_transform

#endif  // DKGREEN_DK_TRANSFORM_HPP_
