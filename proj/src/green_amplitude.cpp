// SPDX-License-Identifier: Apache-2.0

#include "dkgreen/green_amplitude.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dkgreen/errors.hpp"
#include "dkgreen/specfun.hpp"

namespace dkgreen::green_amplitude {

namespace {

// Half-width of the PoleError guard band in the Gamma argument.
constexpr double kPoleGuard = 1e-9;

void require_ordered(double big, double small, const char* who) {
  if (!(small > 0.0)) {
    throw DomainError(std::string(who) + ": radii must be positive");
  }
  if (big < small) {
    throw OrderError(std::string(who) + ": needs r_b >= r_a, got r_b = " +
                     std::to_string(big) + " < r_a = " + std::to_string(small));
  }
}

void require_off_pole(double gamma_arg, const char* who) {
  double r = std::round(gamma_arg);
  if (r <= 0.0 && std::abs(gamma_arg - r) < kPoleGuard) {
    throw PoleError(std::string(who) + ": Gamma argument " +
                    std::to_string(gamma_arg) +
                    " within guard band of a bound-state pole");
  }
}

double gamma_ratio(double num, double den) {
  specfun::LogGamma n = specfun::log_gamma(num);
  specfun::LogGamma d = specfun::log_gamma(den);
  return n.sign * d.sign * std::exp(n.log_abs - d.log_abs);
}

// kappa(eps) at fixed coupling, without constructing a validated system;
// used by the bracketing root finder which probes up to eps = 1.
double kappa_of(double eps, double coupling) {
  return eps * coupling / std::sqrt((1.0 - eps) * (1.0 + eps));
}

}  // namespace

double gamma_pole_argument(const CoulombSystem& c) {
  return 0.5 + c.mu_tilde() - c.kappa();
}

GreenValue oscillator_green(const OscillatorParams& p, double z_b,
                            double z_a) {
  if (!(p.omega > 0.0) || !(p.mass > 0.0) || !(p.mu_o > 0.0)) {
    throw DomainError("oscillator_green: invalid oscillator parameters");
  }
  require_ordered(z_b, z_a, "oscillator_green");

  double kappa = p.pseudoenergy / (2.0 * p.omega);
  double gamma_arg = 0.5 * (1.0 + p.mu_o) - kappa;
  require_off_pole(gamma_arg, "oscillator_green");

  specfun::WhittakerIndex idx{kappa, 0.5 * p.mu_o};
  double w = specfun::whittaker_w(idx, p.mass * p.omega * z_b * z_b);
  double m = specfun::whittaker_m(idx, p.mass * p.omega * z_a * z_a);

  GreenValue g;
  g.magnitude = gamma_ratio(gamma_arg, 1.0 + p.mu_o) / p.omega /
                std::sqrt(z_b * z_a) * w * m;
  return g;
}

GreenValue coulomb_green(const CoulombSystem& c, double r_b, double r_a) {
  require_ordered(r_b, r_a, "coulomb_green");

  double v = c.v();
  double mt = c.mu_tilde();
  double kappa = c.kappa();
  double gamma_arg = 0.5 + mt - kappa;
  require_off_pole(gamma_arg, "coulomb_green");

  specfun::WhittakerIndex idx{kappa, mt};
  double w = specfun::whittaker_w(idx, 2.0 * v * r_b);
  double m = specfun::whittaker_m(idx, 2.0 * v * r_a);

  GreenValue g;
  g.magnitude = gamma_ratio(gamma_arg, 1.0 + 2.0 * mt) / v * w * m;
  return g;
}

IdentityReport dk_identity_check(const CoulombSystem& c, double r_b,
                                 double r_a) {
  IdentityReport rep;
  rep.direct = coulomb_green(c, r_b, r_a).magnitude;

  double z_b = coulomb_chain::oscillator_radius(r_b);
  double z_a = coulomb_chain::oscillator_radius(r_a);
  double prefactor = 0.5 * std::sqrt(z_b * z_a);
  rep.chained =
      prefactor *
      oscillator_green(coulomb_chain::to_oscillator(c), z_b, z_a).magnitude;

  rep.rel_deviation =
      std::abs(rep.direct - rep.chained) / std::abs(rep.direct);
  return rep;
}

std::vector<SpectrumEntry> bound_spectrum(const CoulombSystem& c_template,
                                          int n_r_max) {
  if (n_r_max < 0) throw DomainError("bound_spectrum: n_r_max must be >= 0");
  const double alpha = c_template.coupling;
  if (alpha == 0.0) {
    throw DomainError(
        "bound_spectrum: zero coupling carries no bound states "
        "(epsilon_n -> 1)");
  }
  const double mt = c_template.mu_tilde();

  std::vector<SpectrumEntry> entries;
  entries.reserve(static_cast<std::size_t>(n_r_max) + 1);
  double previous = 0.0;
  for (int n_r = 0; n_r <= n_r_max; ++n_r) {
    const double big_n = n_r + 0.5 + mt;
    const double closed = big_n / std::sqrt(big_n * big_n + alpha * alpha);
    if (!(1.0 - closed > 1e-13)) {
      throw ThresholdError(
          "bound_spectrum: binding below double resolution at n_r = " +
          std::to_string(n_r));
    }

    // Bracketed bisection on kappa(eps) - N, monotone on (0, 1).
    double lo = 0.0;
    double hi = 0.5;
    int expand = 0;
    while (kappa_of(hi, alpha) < big_n && expand++ < 200) {
      lo = hi;
      hi = 0.5 * (1.0 + hi);
      if (hi >= 1.0) {
        hi = 1.0;
        break;
      }
    }
    while (hi - lo > 1e-14) {
      double mid = 0.5 * (lo + hi);
      (kappa_of(mid, alpha) < big_n ? lo : hi) = mid;
    }
    // One Newton polish with the analytic derivative
    // d kappa/d eps = alpha (1-eps^2)^{-3/2}.
    double root = 0.5 * (lo + hi);
    {
      double om = (1.0 - root) * (1.0 + root);
      double f = kappa_of(root, alpha) - big_n;
      double fp = alpha / (om * std::sqrt(om));
      double polished = root - f / fp;
      if (polished > lo - 1e-13 && polished < hi + 1e-13) root = polished;
    }

    if (std::abs(root - closed) > 1e-12) {
      throw std::logic_error(
          "bound_spectrum: root-finding and closed form disagree at n_r = " +
          std::to_string(n_r));
    }
    if (n_r > 0 && !(closed > previous)) {
      throw std::logic_error("bound_spectrum: spectrum not increasing");
    }
    previous = closed;
    entries.push_back({n_r, c_template.l, closed, big_n});
  }
  return entries;
}

double residue_at_pole(const CoulombSystem& c, const SpectrumEntry& entry,
                       double r_b, double r_a) {
  require_ordered(r_b, r_a, "residue_at_pole");
  if (entry.l != c.l) {
    throw DomainError("residue_at_pole: entry does not belong to this l");
  }
  const double eps_n = entry.energy_ratio;
  {
    CoulombSystem probe(eps_n, c.coupling, c.l, c.dim);
    double pole_arg = gamma_pole_argument(probe) + entry.n_r;
    if (std::abs(pole_arg) > 1e-6) {
      throw DomainError("residue_at_pole: entry is not a pole of this system");
    }
  }

  // Step scale: an offset of 0.1 in the Gamma argument, converted back to
  // eps through d(gamma_arg)/d(eps) = -alpha (1-eps^2)^{-3/2}.
  double om = (1.0 - eps_n) * (1.0 + eps_n);
  double slope = c.coupling / (om * std::sqrt(om));
  double h0 = std::min(0.1 / slope, 0.45 * eps_n);

  // phi(h) = h G(eps_n - h) is analytic in h; Neville extrapolation to 0.
  constexpr int kLevels = 6;
  double tableau[kLevels];
  for (int k = 0; k < kLevels; ++k) {
    double h = h0 / static_cast<double>(1 << k);
    CoulombSystem shifted(eps_n - h, c.coupling, c.l, c.dim);
    tableau[k] = h * coulomb_green(shifted, r_b, r_a).magnitude;
    for (int j = k - 1; j >= 0; --j) {
      double ratio = static_cast<double>(1 << (k - j));
      tableau[j] = tableau[j + 1] + (tableau[j + 1] - tableau[j]) / (ratio - 1.0);
    }
  }
  return tableau[0];
}

}  // namespace dkgreen::green_amplitude
