// SPDX-License-Identifier: Apache-2.0

#include "dkgreen/dk_transform.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dkgreen/errors.hpp"

namespace dkgreen::dk_transform {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TransformSpec TransformSpec::identity() {
  TransformSpec t;
  t.h = [](double q) { return q; };
  t.d1 = [](double) { return 1.0; };
  t.d2 = [](double) { return 0.0; };
  t.d3 = [](double) { return 0.0; };
  t.q_min = -kInf;
  t.q_max = kInf;
  t.f = [](double) { return 1.0; };
  return t;
}

TransformSpec TransformSpec::exponential() {
  TransformSpec t;
  t.h = [](double x) { return std::exp(x); };
  t.d1 = t.h;
  t.d2 = t.h;
  t.d3 = t.h;
  t.q_min = -kInf;
  t.q_max = kInf;
  t.f = [](double r) { return r * r; };
  return t;
}

TransformSpec TransformSpec::logarithmic() {
  TransformSpec t;
  t.h = [](double z) { return std::log(z); };
  t.d1 = [](double z) { return 1.0 / z; };
  t.d2 = [](double z) { return -1.0 / (z * z); };
  t.d3 = [](double z) { return 2.0 / (z * z * z); };
  t.q_min = 0.0;
  t.q_max = kInf;
  t.f = [](double x_o) { return std::exp(-2.0 * x_o); };
  return t;
}

double effective_potential(const TransformSpec& t, double q, double rho,
                           double mass) {
  if (!t.contains(q)) {
    throw DomainError("effective_potential: q = " + std::to_string(q) +
                      " outside (" + std::to_string(t.q_min) + ", " +
                      std::to_string(t.q_max) + ")");
  }
  if (!(rho > 0.0)) throw DomainError("effective_potential: rho must be > 0");
  if (!(mass > 0.0)) throw DomainError("effective_potential: mass must be > 0");

  double h1 = t.d1(q);
  if (std::abs(h1) < 1e-300) {
    throw DegenerateMap("effective_potential: h'(q) vanishes at q = " +
                        std::to_string(q));
  }
  double r2 = t.d2(q) / h1;
  double r3 = t.d3(q) / h1;
  return -(rho / mass) * (0.25 * r3 - 0.375 * r2 * r2);
}

double effective_potential_numeric(const Map1D& h, double q, double rho,
                                   double mass) {
  // 5-point stencils; the third derivative limits the accuracy to ~1e-6.
  double step = 3e-3 * std::max(1.0, std::abs(q));
  double f2 = h(q + 2 * step);
  double f1 = h(q + step);
  double fm1 = h(q - step);
  double fm2 = h(q - 2 * step);
  double f0 = h(q);

  double h1 = (-f2 + 8 * f1 - 8 * fm1 + fm2) / (12 * step);
  double h2 = (-f2 + 16 * f1 - 30 * f0 + 16 * fm1 - fm2) / (12 * step * step);
  double h3 = (f2 - 2 * f1 + 2 * fm1 - fm2) / (2 * step * step * step);

  if (std::abs(h1) < 1e-300) {
    throw DegenerateMap("effective_potential_numeric: h'(q) vanishes");
  }
  double r2 = h2 / h1;
  double r3 = h3 / h1;
  return -(rho / mass) * (0.25 * r3 - 0.375 * r2 * r2);
}

ConsistencyReport verify_f_consistency(const TransformSpec& t, const Map1D& f,
                                       std::span<const double> q_grid,
                                       double tol) {
  ConsistencyReport report;
  report.tolerance = tol;
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    double q = q_grid[i];
    if (!t.contains(q)) {
      throw DomainError("verify_f_consistency: grid point outside domain");
    }
    double d1 = t.d1(q);
    double dev = std::abs(d1 * d1 - f(t.h(q)));
    if (dev > report.max_abs_deviation) {
      report.max_abs_deviation = dev;
      report.worst_index = i;
    }
  }
  report.pass = report.max_abs_deviation <= tol;
  return report;
}

}  // namespace dkgreen::dk_transform
