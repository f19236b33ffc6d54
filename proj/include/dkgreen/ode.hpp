// SPDX-License-Identifier: Apache-2.0
//
// Adaptive Dormand-Prince 5(4) integration specialized to the linear
// second-order form u'' = g(r) u.  Supports either direction of integration,
// lands exactly on caller-supplied checkpoints, and renormalizes (u, u') by
// powers of two so that tails spanning hundreds of e-folds stay
// representable; the accumulated binary exponent travels with the state.

#ifndef DKGREEN_ODE_HPP_
#define DKGREEN_ODE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>

#include "dkgreen/errors.hpp"

namespace dkgreen::ode {

struct Options {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  double initial_step = 0.0;  // 0 => heuristic from the first derivative
  std::size_t max_steps = 4000000;
};

struct State {
  double r = 0.0;
  double u = 0.0;
  double du = 0.0;
  int scale2 = 0;  // stored pair is the true solution times 2^{-scale2}
};

namespace detail {

// Dormand-Prince coefficients (FSAL pair).
inline constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
inline constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
inline constexpr double kB5[7] = {35.0 / 384,     0.0,      500.0 / 1113,
                                  125.0 / 192,    -2187.0 / 6784,
                                  11.0 / 84,      0.0};
inline constexpr double kB4[7] = {5179.0 / 57600,  0.0,       7571.0 / 16695,
                                  393.0 / 640,     -92097.0 / 339200,
                                  187.0 / 2100,    1.0 / 40};

}  // namespace detail

// Integrates u'' = g(r) u from (r0, u0, du0) to r1.  `checkpoints` must be
// sorted in the direction of travel and contained in the closed span
// [min(r0,r1), max(r0,r1)]; `emit` fires once per checkpoint (and is also
// handed the final state if r1 itself is not listed).
template <typename G, typename Emit>
State integrate_second_order(G&& g, double r0, double u0, double du0,
                             double r1, std::span<const double> checkpoints,
                             Emit&& emit, const Options& opt = {}) {
  const double dir = (r1 >= r0) ? 1.0 : -1.0;
  State s{r0, u0, du0, 0};

  auto renormalize = [&s]() {
    double m = std::max(std::abs(s.u), std::abs(s.du));
    if (m > 1e250) {
      s.u = std::ldexp(s.u, -840);
      s.du = std::ldexp(s.du, -840);
      s.scale2 += 840;
    } else if (m > 0.0 && m < 1e-250) {
      s.u = std::ldexp(s.u, 840);
      s.du = std::ldexp(s.du, 840);
      s.scale2 -= 840;
    }
  };

  std::size_t next_cp = 0;
  auto flush_checkpoints_at = [&](double r) {
    while (next_cp < checkpoints.size() &&
           dir * (checkpoints[next_cp] - r) <= 0.0) {
      State cp = s;
      cp.r = checkpoints[next_cp];
      emit(cp);
      ++next_cp;
    }
  };

  // Step seed: either caller-provided or scaled from the local curvature.
  double h;
  if (opt.initial_step > 0.0) {
    h = dir * opt.initial_step;
  } else {
    double gr = std::abs(g(r0));
    h = dir * std::clamp(0.01 / std::sqrt(gr + 1.0), 1e-12, 0.1);
  }

  // Emit any checkpoint equal to the start.
  flush_checkpoints_at(r0);

  double k_u[7];
  double k_du[7];
  bool have_first = false;
  double f_u0 = 0.0;
  double f_du0 = 0.0;

  for (std::size_t step = 0; step < opt.max_steps; ++step) {
    if (dir * (r1 - s.r) <= 0.0) break;

    // Clip the attempted step to the nearer of the next checkpoint and the
    // end point; the controller step `h` itself is preserved across clips.
    double target = r1;
    if (next_cp < checkpoints.size() &&
        dir * (checkpoints[next_cp] - target) < 0.0) {
      target = checkpoints[next_cp];
    }
    double h_step = h;
    bool clipped = false;
    if (dir * (s.r + h_step - target) >= 0.0) {
      h_step = target - s.r;
      clipped = true;
    }
    if (std::abs(h_step) < 1e-15 * std::max(1.0, std::abs(s.r))) {
      if (clipped) {
        s.r = target;  // degenerate clip: land exactly and continue
        flush_checkpoints_at(s.r);
        have_first = false;
        continue;
      }
      throw StiffnessError("ode: step size collapsed at r = " +
                           std::to_string(s.r));
    }

    if (!have_first) {
      f_u0 = s.du;
      f_du0 = g(s.r) * s.u;
      have_first = true;
    }
    k_u[0] = f_u0;
    k_du[0] = f_du0;

    for (int i = 1; i < 7; ++i) {
      double uu = s.u;
      double vdu = s.du;
      for (int j = 0; j < i; ++j) {
        uu += h_step * detail::kA[i][j] * k_u[j];
        vdu += h_step * detail::kA[i][j] * k_du[j];
      }
      double r = s.r + detail::kC[i] * h_step;
      k_u[i] = vdu;
      k_du[i] = g(r) * uu;
    }

    double u5 = s.u;
    double du5 = s.du;
    double eu = 0.0;
    double edu = 0.0;
    for (int i = 0; i < 7; ++i) {
      u5 += h_step * detail::kB5[i] * k_u[i];
      du5 += h_step * detail::kB5[i] * k_du[i];
      eu += h_step * (detail::kB5[i] - detail::kB4[i]) * k_u[i];
      edu += h_step * (detail::kB5[i] - detail::kB4[i]) * k_du[i];
    }

    double sk_u =
        opt.abs_tol + opt.rel_tol * std::max(std::abs(s.u), std::abs(u5));
    double sk_du =
        opt.abs_tol + opt.rel_tol * std::max(std::abs(s.du), std::abs(du5));
    double err = std::sqrt(0.5 * ((eu / sk_u) * (eu / sk_u) +
                                  (edu / sk_du) * (edu / sk_du)));

    if (err <= 1.0) {
      s.r = clipped ? target : s.r + h_step;
      s.u = u5;
      s.du = du5;
      // FSAL: stage 7 equals the first stage of the next step.
      f_u0 = k_u[6];
      f_du0 = k_du[6];
      flush_checkpoints_at(s.r);
      double before = std::max(std::abs(s.u), std::abs(s.du));
      renormalize();
      if (std::max(std::abs(s.u), std::abs(s.du)) != before) have_first = false;
      if (!clipped) {
        double grow = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h = h_step * std::clamp(grow, 0.2, 5.0);
      }
    } else {
      h = h_step * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
      have_first = false;  // stages no longer valid after rejection
    }
  }

  if (dir * (r1 - s.r) > 0.0) {
    throw StiffnessError("ode: max step count exhausted at r = " +
                         std::to_string(s.r));
  }
  flush_checkpoints_at(s.r);
  return s;
}

}  // namespace dkgreen::ode

#endif  // DKGREEN_ODE_HPP_
