// SPDX-License-Identifier: Apache-2.0

#include "dkgreen/coulomb_chain.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dkgreen/errors.hpp"

namespace dkgreen::coulomb_chain {

CoulombSystem::CoulombSystem(double energy_ratio_, double coupling_, int l_,
                             int dim_)
    : energy_ratio(energy_ratio_), coupling(coupling_), l(l_), dim(dim_) {
  if (!std::isfinite(energy_ratio_) || !std::isfinite(coupling_)) {
    throw DomainError("CoulombSystem: non-finite parameter");
  }
  if (l_ < 0) throw DomainError("CoulombSystem: l must be non-negative");
  if (dim_ < 2) throw DomainError("CoulombSystem: dim must be >= 2");
  if (coupling_ < 0.0) {
    throw DomainError("CoulombSystem: coupling must be non-negative");
  }
  if (!(std::abs(energy_ratio_) < 1.0)) {
    throw ThresholdError("CoulombSystem: |epsilon| = " +
                         std::to_string(std::abs(energy_ratio_)) +
                         " >= 1 (outside the bound regime)");
  }
  if (!(coupling_ < mu_c())) {
    throw FallToCenter("CoulombSystem: coupling " + std::to_string(coupling_) +
                       " >= l + dim/2 - 1 = " + std::to_string(mu_c()));
  }
}

double CoulombSystem::mu_tilde() const {
  return std::sqrt(mu_c() * mu_c() - coupling * coupling);
}

double CoulombSystem::v() const {
  // (1-eps)(1+eps) keeps precision when epsilon is close to 1.
  return std::sqrt((1.0 - energy_ratio) * (1.0 + energy_ratio));
}

double CoulombSystem::kappa() const { return energy_ratio * coupling / v(); }

MorseParams to_morse(const CoulombSystem& c) {
  MorseParams m;
  m.v = c.v();
  m.a_dk = c.energy_ratio * c.coupling / (m.v * m.v);
  m.e_m = -0.5 * (c.mu_c() * c.mu_c() - c.coupling * c.coupling);
  return m;
}

OscillatorParams oscillator_from_morse(const MorseParams& m) {
  OscillatorParams p;
  p.mass = 4.0;
  p.mu_o = std::sqrt(-2.0 * p.mass * m.e_m);
  p.omega = 2.0 * m.v / p.mass;
  p.pseudoenergy = 4.0 * m.a_dk * m.v * m.v / p.mass;
  return p;
}

OscillatorParams to_oscillator(const CoulombSystem& c) {
  OscillatorParams p;
  p.mass = 4.0;
  p.mu_o = 2.0 * c.mu_tilde();
  p.omega = 0.5 * c.v();
  p.pseudoenergy = c.energy_ratio * c.coupling;

  // Both dictionary routes must agree before the result leaves the module.
  OscillatorParams q = oscillator_from_morse(to_morse(c));
  auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-13 * std::max(std::abs(a), 1.0);
  };
  if (!close(p.mu_o, q.mu_o) || !close(p.omega, q.omega) ||
      !close(p.pseudoenergy, q.pseudoenergy)) {
    throw std::logic_error("to_oscillator: dictionary routes disagree");
  }
  return p;
}

double oscillator_radius(double r_coulomb) {
  if (!(r_coulomb >= 0.0)) {
    throw DomainError("oscillator_radius: negative Coulomb radius");
  }
  return std::sqrt(r_coulomb);
}

double coulomb_radius(double z_oscillator) {
  return z_oscillator * z_oscillator;
}

}  // namespace dkgreen::coulomb_chain
