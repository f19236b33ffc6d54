// SPDX-License-Identifier: Apache-2.0
//
// Real-argument special functions backing the closed-form Green's functions:
// log-Gamma with sign, Kummer M(a,b,z), Tricomi U(a,b,z) and the Whittaker
// pair M_{kappa,mu}, W_{kappa,mu}.
//
// Accuracy contracts (relative, on the supported grids):
//   log_gamma   <= 1e-13   for x in [-50, 200]
//   kummer_m    <= 1e-11   for a,b in [-20, 20], z in [0, 200]
//   tricomi_u   <= 1e-10
//   whittaker_* <= 1e-10
//
// All evaluations run on double-double internals (dkgreen/dd.hpp) and carry a
// running error estimate; an evaluation that cannot meet its estimate throws
// NonConvergence rather than returning a degraded value.

#ifndef DKGREEN_SPECFUN_HPP_
#define DKGREEN_SPECFUN_HPP_

#include "dkgreen/errors.hpp"

namespace dkgreen::specfun {

namespace config {
// Crossover between the connection-formula and the asymptotic evaluation of
// U(a,b,z).  Below the crossover the two-series connection formula runs in
// double-double arithmetic; above it the divergent large-z series is summed
// to its smallest term.
inline constexpr double kUCrossover = 30.0;
// Term cap for Kummer/Tricomi power series.
inline constexpr int kMaxSeriesTerms = 4000;
// |b - nearest integer| at or below this engages the integer-b limit
// procedure (evaluate at b +/- kBPerturbation and average).
inline constexpr double kNearIntegerB = 1e-9;
// Half-width of that perturbation; equals a mu-shift of 1e-9 in the
// Whittaker parametrization, doubled by b = 1 + 2 mu.
inline constexpr double kBPerturbation = 2e-9;
// Guard band around Gamma poles.
inline constexpr double kGammaPoleGuard = 1e-12;
// Every route must estimate its relative error at or below this.
inline constexpr double kTargetRelError = 5e-12;
// Largest z the integer-b limit procedure is allowed to serve; beyond it the
// perturbation amplifies cancellation too much and the integral
// representation takes over.
inline constexpr double kPerturbationZMax = 15.0;
}  // namespace config

// ln|Gamma(x)| together with the sign of Gamma(x).
struct LogGamma {
  double log_abs;
  int sign;
};

// Throws PoleError when x is within kGammaPoleGuard of a non-positive
// integer (bound-state pole signal for the Green's-function callers).
LogGamma log_gamma(double x);

// Confluent hypergeometric 1F1(a; b; z), z >= 0.
// Throws ParameterError for b at a non-positive integer, DomainError for
// z < 0, NonConvergence on term-cap exhaustion.
double kummer_m(double a, double b, double z);

// Tricomi U(a, b, z), z > 0.  Integer b is served through the limit
// procedure; a at a non-positive integer through the terminating polynomial.
double tricomi_u(double a, double b, double z);

// Index pair (kappa, mu) of the Whittaker functions.
struct WhittakerIndex {
  double kappa;
  double mu;

  // Requires mu > -1/2 so the regular solution exists with exponent mu+1/2.
  WhittakerIndex(double kappa_, double mu_);
};

// M_{kappa,mu}(z) = e^{-z/2} z^{mu+1/2} 1F1(mu-kappa+1/2; 1+2mu; z), z >= 0.
double whittaker_m(const WhittakerIndex& idx, double z);

// W_{kappa,mu}(z) = e^{-z/2} z^{mu+1/2} U(mu-kappa+1/2; 1+2mu; z), z > 0.
double whittaker_w(const WhittakerIndex& idx, double z);

// Evaluation route actually taken by tricomi_u; exposed so tests can pin the
// independence of an oracle from the implementation path it checks.
enum class URoute {
  kPolynomial,           // a at a non-positive integer: terminating sum
  kAsymptotic,           // large-z divergent series at optimal truncation
  kConnection,           // two-Kummer connection formula (double-double)
  kPerturbedConnection,  // integer-b limit procedure
  kQuadrature,           // exp-sinh quadrature of the Laplace integral
  kRecurrence,           // downward a-recurrence seeded by quadrature
};

namespace detail {
double tricomi_u_traced(double a, double b, double z, URoute* route);
}

}  // namespace dkgreen::specfun

#endif  // DKGREEN_SPECFUN_HPP_
