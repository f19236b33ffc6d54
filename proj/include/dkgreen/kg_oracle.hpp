// SPDX-License-Identifier: Apache-2.0
//
// Independent verification path for the closed-form Coulomb kernel: the
// radial pseudotime Hamiltonian
//
//   H = -(1/2) d^2/dr^2 + U(r),
//   U(r) = (mu_c^2 - 1/4)/(2 r^2) - (eps + alpha/r)^2/2 + 1/2,
//
// is integrated numerically from both ends (Frobenius start at the origin,
// asymptotic-tail start at large r) and its resolvent at spectral point zero
// is assembled by the two-solution Wronskian construction
// G = 2 u_reg(r_<) u_dec(r_>)/W.  With that normalization the oracle kernel
// equals the closed form directly (conversion constant 1).

#ifndef DKGREEN_KG_ORACLE_HPP_
#define DKGREEN_KG_ORACLE_HPP_

#include <span>
#include <vector>

#include "dkgreen/coulomb_chain.hpp"

namespace dkgreen::kg_oracle {

using coulomb_chain::CoulombSystem;

struct RadialProblem {
  CoulombSystem system;

  explicit RadialProblem(const CoulombSystem& c) : system(c) {}

  // U(r) above; positive (1-eps^2)/2 tail as r -> inf in the bound regime.
  double potential(double r) const;
  // u'' = rhs(r) u, rhs = 2 U(r).
  double rhs(double r) const;
  // Frobenius exponent of the regular solution, s = 1/2 + mu_tilde; the
  // coupling shift enters through the 1/r^2 piece of (eps + alpha/r)^2.
  double regular_exponent() const;
};

struct IntegrationOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
};

// Solution samples on the requested checkpoint set.  Values carry a binary
// exponent so that tails spanning hundreds of e-folds stay representable:
// the true solution at a row is u * 2^scale2.
class SolutionTable {
 public:
  struct Row {
    double r;
    double u;
    double du;
    int scale2;
  };

  const std::vector<Row>& rows() const { return rows_; }
  bool covers(double r) const;
  // Exact-node lookup; DomainError when r was not a checkpoint.
  const Row& at(double r) const;
  double value(double r) const;
  double derivative(double r) const;

 private:
  friend SolutionTable integrate_regular(const RadialProblem&, double, double,
                                         std::span<const double>,
                                         const IntegrationOptions&);
  friend SolutionTable integrate_decaying(const RadialProblem&, double, double,
                                          std::span<const double>,
                                          const IntegrationOptions&);
  std::vector<Row> rows_;
};

// Integrates the regular solution outward from r_start (two-term Frobenius
// start u ~ r^s (1 + c1 r); r_start must be small enough that the truncated
// tail stays below 1e-12).  Checkpoints must lie inside [r_start, r_end].
SolutionTable integrate_regular(const RadialProblem& p, double r_start,
                                double r_end,
                                std::span<const double> checkpoints,
                                const IntegrationOptions& opt = {});

// Integrates the decaying solution inward from r_far, started on the
// asymptotic form e^{-v r} (2 v r)^kappa (leading exponential with the
// first-order power correction).  Requires v*r_far >= 35 so the admixture of
// the growing solution dies on the way in.
SolutionTable integrate_decaying(const RadialProblem& p, double r_far,
                                 double r_end,
                                 std::span<const double> checkpoints,
                                 const IntegrationOptions& opt = {});

// u1(r) u2'(r) - u1'(r) u2(r) from the stored derivative channels.
double wronskian(const SolutionTable& u1, const SolutionTable& u2, double r);

// One-shot Sturm-Liouville kernel 2 u_reg(r_<) u_dec(r_>)/W at spectral
// point zero.  Throws NearPole when |W| falls below 1e-10 of its natural
// scale (the system is numerically at a bound state).
double oracle_green(const RadialProblem& p, double r_b, double r_a,
                    const IntegrationOptions& opt = {});

// Batched evaluator: integrates once for a whole radius set, then serves
// arbitrary ordered pairs from the stored tables.
class OracleGreen {
 public:
  OracleGreen(const RadialProblem& p, std::span<const double> radii,
              const IntegrationOptions& opt = {});

  double value(double r_b, double r_a) const;
  // Relative spread of the Wronskian across the sampled radii; the
  // Sturm-Liouville constancy invariant.
  double wronskian_drift() const { return drift_; }

 private:
  SolutionTable regular_;
  SolutionTable decaying_;
  double w_raw_ = 0.0;   // Wronskian in the scale frame below
  int w_scale2_ = 0;
  double drift_ = 0.0;
};

// Normalized Wronskian mismatch W(eps)/scale(eps); changes sign exactly at
// the bound-state energies.
double wronskian_mismatch(const CoulombSystem& c_template, double epsilon,
                          const IntegrationOptions& opt = {});

// Bisection for a zero of wronskian_mismatch inside [eps_lo, eps_hi];
// requires a sign change across the bracket.
double find_wronskian_zero(const CoulombSystem& c_template, double eps_lo,
                           double eps_hi, double tol,
                           const IntegrationOptions& opt = {});

}  // namespace dkgreen::kg_oracle

#endif  // DKGREEN_KG_ORACLE_HPP_
