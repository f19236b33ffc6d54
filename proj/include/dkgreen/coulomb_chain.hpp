// SPDX-License-Identifier: Apache-2.0
//
// Physical parameter sets of the relativistic Coulomb problem and the
// two-stage dictionary that maps them onto a radial harmonic oscillator:
// Coulomb -> Morse (via r = e^x) -> oscillator (via x = 2 x_O, x_O = ln z).
//
// Natural units throughout: hbar = c = 1 and the Coulomb mass m_C = 1, so
// energies are in units of m_C c^2 and lengths in reduced Compton
// wavelengths.  Every quantity below is a pure number.

#ifndef DKGREEN_COULOMB_CHAIN_HPP_
#define DKGREEN_COULOMB_CHAIN_HPP_

namespace dkgreen::coulomb_chain {

// Relativistic Coulomb system in the bound regime.
//   energy_ratio  epsilon = E/(m c^2), |epsilon| < 1
//   coupling      alpha_fs = e^2/(hbar c), 0 <= alpha_fs < mu_c
//   l             angular momentum, >= 0
//   dim           spatial dimension, >= 2
// The derived centrifugal index is mu_c = l + dim/2 - 1.
struct CoulombSystem {
  double energy_ratio;
  double coupling;
  int l;
  int dim;

  CoulombSystem(double energy_ratio_, double coupling_, int l_, int dim_);

  double mu_c() const { return l + 0.5 * dim - 1.0; }
  // sqrt(mu_c^2 - alpha_fs^2): the coupling-shifted centrifugal index.
  double mu_tilde() const;
  // sqrt(1 - epsilon^2): the inverse length scale of the bound tail.
  double v() const;
  // Whittaker first index epsilon*alpha_fs/sqrt(1-epsilon^2) (= v * a_dk).
  double kappa() const;
};

// Intermediate Morse-stage parameters.
//   v     inverse length scale sqrt(1 - epsilon^2)
//   a_dk  depth parameter epsilon*alpha_fs/(1 - epsilon^2); the product
//         v*a_dk is the only combination consumed downstream
//   e_m   pseudoenergy -(mu_c^2 - alpha_fs^2)/2
struct MorseParams {
  double v;
  double a_dk;
  double e_m;
};

// Radial harmonic oscillator parameters produced by the dictionary.
//   mass = 4, omega = sqrt(1-eps^2)/2, pseudoenergy = eps*alpha_fs,
//   mu_o = 2 sqrt(mu_c^2 - alpha_fs^2).
// Only mu_o enters the closed forms; (l_O, D_O) are never disaggregated.
struct OscillatorParams {
  double mass;
  double omega;
  double pseudoenergy;
  double mu_o;
};

MorseParams to_morse(const CoulombSystem& c);

// Direct dictionary.  Internally asserts consistency with the Morse-stage
// route before returning.
OscillatorParams to_oscillator(const CoulombSystem& c);

// Oscillator parameters reconstructed from the Morse stage alone
// (mu_o^2 = -2 m_O e_m, omega = 2 v / m_O, pseudoenergy = 4 a_dk v^2 / m_O
// at m_O = 4).  Used to cross-check the two dictionary routes.
OscillatorParams oscillator_from_morse(const MorseParams& m);

// The trivial rescaling x = 2 x_O and its inverse.
inline double half_coordinate_map(double x) { return 0.5 * x; }
inline double half_coordinate_map_inverse(double x_o) { return 2.0 * x_o; }

// Composition of the three maps: Coulomb radius r = e^x = e^{2 x_O} = z^2,
// so the oscillator radius is z = sqrt(r).
double oscillator_radius(double r_coulomb);
double coulomb_radius(double z_oscillator);

}  // namespace dkgreen::coulomb_chain

#endif  // DKGREEN_COULOMB_CHAIN_HPP_
