// SPDX-License-Identifier: Apache-2.0
//
// Closed-form radial fixed-energy amplitudes (resolvent kernels) of the
// radial harmonic oscillator and the relativistic Coulomb system, the
// identity connecting them through the Duru-Kleinert dictionary, and the
// bound-state spectrum carried by the poles of the Gamma prefactor.
//
// Ordering convention: the closed forms attach W to the larger radius and M
// to the smaller one, so both kernels require r_b >= r_a (OrderError
// otherwise); the value then depends only on the unordered pair.
//
// Prefactor convention: kernels are returned as real magnitudes.  The
// oscillator form's -i and the i hbar/(2 m c) of the radial decomposition
// are never multiplied in; what IS included is the resolvent normalization
// (1/omega for the oscillator, 1/sqrt(1-eps^2) for the Coulomb kernel).
// With that convention both magnitudes are literally <x_b| H^{-1} |x_a> of
// the corresponding radial pseudotime Hamiltonian at spectral point zero.

#ifndef DKGREEN_GREEN_AMPLITUDE_HPP_
#define DKGREEN_GREEN_AMPLITUDE_HPP_

#include <vector>

#include "dkgreen/coulomb_chain.hpp"

namespace dkgreen::green_amplitude {

using coulomb_chain::CoulombSystem;
using coulomb_chain::OscillatorParams;

struct PrefactorConvention {
  // The constant i of the pseudotime resolvent is factored out of the
  // magnitude and reported here.
  bool imaginary_unit_factored_out = true;
  // 1/omega resp. m c/sqrt(m^2 c^4 - E^2) is part of the magnitude.
  bool resolvent_normalization_included = true;
  // The i hbar/(2 m c) of the partial-wave decomposition belongs to the
  // full-amplitude assembly and is not folded in.
  bool radial_reduction_factor_included = false;
};

struct GreenValue {
  double magnitude;
  PrefactorConvention prefactor_convention;
};

// (1/omega) G((1+mu_o)/2 - E/2w)/G(1+mu_o) (z_b z_a)^{-1/2}
//   * W_{E/2w, mu_o/2}(m w z_b^2) M_{E/2w, mu_o/2}(m w z_a^2).
// Throws PoleError within 1e-9 of a bound-state pole of the Gamma argument,
// OrderError for z_b < z_a.
GreenValue oscillator_green(const OscillatorParams& p, double z_b, double z_a);

// (1/sqrt(1-eps^2)) G(1/2+mt-k)/G(1+2mt)
//   * W_{k,mt}(2 sqrt(1-eps^2) r_b) M_{k,mt}(2 sqrt(1-eps^2) r_a)
// with mt = sqrt(mu_c^2 - alpha_fs^2), k = eps alpha_fs/sqrt(1-eps^2).
GreenValue coulomb_green(const CoulombSystem& c, double r_b, double r_a);

struct IdentityReport {
  double direct;         // Coulomb kernel evaluated from its own closed form
  double chained;        // prefactor * oscillator kernel at z = sqrt(r)
  double rel_deviation;  // |direct - chained| / |direct|
};

// The equivalence test: evaluates the Coulomb kernel directly and through
// the oscillator kernel with the chained transformation prefactor
// sqrt(z_b z_a)/2 (the 1/2 from the state rescaling |x> = |x_O>/2, the
// sqrt(z_b z_a) from the f^{1/4} endpoint factors of the two maps).
IdentityReport dk_identity_check(const CoulombSystem& c, double r_b,
                                 double r_a);

struct SpectrumEntry {
  int n_r;                       // radial quantum number
  int l;                         // angular momentum
  double energy_ratio;           // epsilon_n in (0, 1)
  double principal_combination;  // N = n_r + 1/2 + sqrt(mu_c^2 - alpha^2)
};

// Bound states from the poles of the Gamma numerator: for n_r = 0..n_r_max
// solves 1/2 + mt - kappa(eps) = -n_r by bracketed bisection plus one Newton
// polish and cross-checks against the closed form
// eps_n = N/sqrt(N^2 + alpha^2); the two must agree to 1e-12.
std::vector<SpectrumEntry> bound_spectrum(const CoulombSystem& c_template,
                                          int n_r_max);

// lim_{eps -> eps_n} (eps_n - eps) G(r_b, r_a; eps), extracted by Richardson
// extrapolation in eps from below the pole.  The sign convention makes the
// result a positive rank-1 product u_n(r_b) u_n(r_a).
double residue_at_pole(const CoulombSystem& c, const SpectrumEntry& entry,
                       double r_b, double r_a);

// The argument of the Gamma numerator, 1/2 + mu_tilde - kappa; poles of the
// kernel sit at its non-positive integers.
double gamma_pole_argument(const CoulombSystem& c);

}  // namespace dkgreen::green_amplitude

#endif  // DKGREEN_GREEN_AMPLITUDE_HPP_
