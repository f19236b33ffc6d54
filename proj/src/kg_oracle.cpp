// SPDX-License-Identifier: Apache-2.0

#include "dkgreen/kg_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dkgreen/errors.hpp"
#include "dkgreen/ode.hpp"

namespace dkgreen::kg_oracle {

double RadialProblem::potential(double r) const {
  double mu = system.mu_c();
  double t = system.energy_ratio + system.coupling / r;
  return 0.5 * (mu * mu - 0.25) / (r * r) - 0.5 * t * t + 0.5;
}

double RadialProblem::rhs(double r) const { return 2.0 * potential(r); }

double RadialProblem::regular_exponent() const {
  return 0.5 + system.mu_tilde();
}

bool SolutionTable::covers(double r) const {
  return !rows_.empty() && r >= rows_.front().r && r <= rows_.back().r;
}

const SolutionTable::Row& SolutionTable::at(double r) const {
  auto it = std::lower_bound(
      rows_.begin(), rows_.end(), r,
      [](const Row& row, double x) { return row.r < x; });
  for (auto cand : {it, it == rows_.begin() ? it : std::prev(it)}) {
    if (cand != rows_.end() &&
        std::abs(cand->r - r) <= 1e-12 * std::max(1.0, std::abs(r))) {
      return *cand;
    }
  }
  throw DomainError("SolutionTable: r = " + std::to_string(r) +
                    " is not a stored node");
}

double SolutionTable::value(double r) const {
  const Row& row = at(r);
  return std::ldexp(row.u, row.scale2);
}

double SolutionTable::derivative(double r) const {
  const Row& row = at(r);
  return std::ldexp(row.du, row.scale2);
}

namespace {

std::vector<double> sorted_checkpoints(std::span<const double> checkpoints,
                                       bool ascending) {
  std::vector<double> cp(checkpoints.begin(), checkpoints.end());
  std::sort(cp.begin(), cp.end());
  if (!ascending) std::reverse(cp.begin(), cp.end());
  cp.erase(std::unique(cp.begin(), cp.end()), cp.end());
  return cp;
}

}  // namespace

SolutionTable integrate_regular(const RadialProblem& p, double r_start,
                                double r_end,
                                std::span<const double> checkpoints,
                                const IntegrationOptions& opt) {
  if (!(0.0 < r_start && r_start < r_end)) {
    throw DomainError("integrate_regular: need 0 < r_start < r_end");
  }

  // Frobenius data: u = r^s sum a_k r^k with
  // a_k k (k + 2 mu~) = B a_{k-1} + C a_{k-2},  B = -2 eps alpha, C = v^2.
  const double s = p.regular_exponent();
  const double two_mu = 2.0 * p.system.mu_tilde();
  const double b_lin = -2.0 * p.system.energy_ratio * p.system.coupling;
  const double c_const = p.system.v() * p.system.v();
  const double a1 = b_lin / (1.0 + two_mu);
  const double a2 = (b_lin * a1 + c_const) / (2.0 * (2.0 + two_mu));
  const double a3 = (b_lin * a2 + c_const * a1) / (3.0 * (3.0 + two_mu));

  double truncation = std::abs(a2) * r_start * r_start +
                      std::abs(a3) * r_start * r_start * r_start;
  if (truncation > 1e-12) {
    throw DomainError(
        "integrate_regular: r_start too large for the two-term Frobenius "
        "start (truncation " +
        std::to_string(truncation) + ")");
  }

  // r^s can be far below 1; carry it as an explicit binary exponent so that
  // the integrated pair starts at O(1).
  double log2_amp = s * std::log2(r_start);
  int base_scale = static_cast<int>(std::floor(log2_amp));
  double amp = std::exp2(log2_amp - base_scale);
  double u0 = amp * (1.0 + a1 * r_start);
  double du0 = amp / r_start * (s + (s + 1.0) * a1 * r_start);

  SolutionTable table;
  auto cp = sorted_checkpoints(checkpoints, true);
  if (!cp.empty() && (cp.front() < r_start || cp.back() > r_end)) {
    throw DomainError("integrate_regular: checkpoint outside [r_start, r_end]");
  }

  ode::Options ode_opt;
  ode_opt.rel_tol = opt.rel_tol;
  ode_opt.abs_tol = opt.abs_tol;
  ode_opt.initial_step = 0.02 * r_start;

  auto g = [&p](double r) { return p.rhs(r); };
  ode::integrate_second_order(
      g, r_start, u0, du0, r_end, std::span<const double>(cp),
      [&](const ode::State& st) {
        table.rows_.push_back({st.r, st.u, st.du, st.scale2 + base_scale});
      },
      ode_opt);
  return table;
}

SolutionTable integrate_decaying(const RadialProblem& p, double r_far,
                                 double r_end,
                                 std::span<const double> checkpoints,
                                 const IntegrationOptions& opt) {
  if (!(0.0 < r_end && r_end < r_far)) {
    throw DomainError("integrate_decaying: need 0 < r_end < r_far");
  }
  const double v = p.system.v();
  if (v * r_far < 35.0) {
    throw DomainError(
        "integrate_decaying: r_far too small, need v*r_far >= 35 for the "
        "asymptotic start");
  }

  // u ~ e^{-v r} (2 v r)^kappa; start in log space and peel off the binary
  // exponent so the stored pair begins at O(1).
  const double kappa = p.system.kappa();
  double ln_u0 = -v * r_far + kappa * std::log(2.0 * v * r_far);
  if (!std::isfinite(ln_u0) || ln_u0 < -1e15) {
    throw UnderflowError("integrate_decaying: tail start underflows");
  }
  double log2_u0 = ln_u0 / 0.6931471805599453;
  int base_scale = static_cast<int>(std::floor(log2_u0));
  double u0 = std::exp2(log2_u0 - base_scale);
  double du0 = u0 * (-v + kappa / r_far);

  SolutionTable table;
  auto cp = sorted_checkpoints(checkpoints, false);
  if (!cp.empty() && (cp.back() < r_end || cp.front() > r_far)) {
    throw DomainError("integrate_decaying: checkpoint outside [r_end, r_far]");
  }

  ode::Options ode_opt;
  ode_opt.rel_tol = opt.rel_tol;
  ode_opt.abs_tol = opt.abs_tol;
  ode_opt.initial_step = std::min(0.05 / v, 0.45 * (r_far - r_end));

  auto g = [&p](double r) { return p.rhs(r); };
  ode::integrate_second_order(
      g, r_far, u0, du0, r_end, std::span<const double>(cp),
      [&](const ode::State& st) {
        table.rows_.push_back({st.r, st.u, st.du, st.scale2 + base_scale});
      },
      ode_opt);
  std::reverse(table.rows_.begin(), table.rows_.end());
  return table;
}

double wronskian(const SolutionTable& u1, const SolutionTable& u2, double r) {
  const auto& a = u1.at(r);
  const auto& b = u2.at(r);
  return std::ldexp(a.u * b.du - a.du * b.u, a.scale2 + b.scale2);
}

namespace {

struct WronskianFrame {
  double raw;     // u_dec u_reg' - u_dec' u_reg in the stored scale frame
  int scale2;     // binary exponent of that frame
  double ratio;   // |raw| / (|u_dec u_reg'| + |u_dec' u_reg|), scale-free
};

WronskianFrame wronskian_frame(const SolutionTable& dec,
                               const SolutionTable& reg, double r) {
  const auto& d = dec.at(r);
  const auto& g = reg.at(r);
  double raw = d.u * g.du - d.du * g.u;
  double scale = std::abs(d.u * g.du) + std::abs(d.du * g.u);
  return {raw, d.scale2 + g.scale2, std::abs(raw) / (scale + 1e-300)};
}

double green_from_tables(const SolutionTable& reg, const SolutionTable& dec,
                         const WronskianFrame& w, double r_b, double r_a) {
  if (!(r_a > 0.0)) throw DomainError("oracle_green: radii must be positive");
  if (r_b < r_a) {
    throw OrderError("oracle_green: needs r_b >= r_a");
  }
  if (w.ratio < 1e-10) {
    throw NearPole("oracle_green: Wronskian vanishes (bound state)");
  }
  const auto& a = reg.at(r_a);
  const auto& b = dec.at(r_b);
  double g_raw = 2.0 * a.u * b.u / w.raw;
  return std::ldexp(g_raw, a.scale2 + b.scale2 - w.scale2);
}

}  // namespace

OracleGreen::OracleGreen(const RadialProblem& p, std::span<const double> radii,
                         const IntegrationOptions& opt) {
  if (radii.empty()) throw DomainError("OracleGreen: empty radius set");
  std::vector<double> cp(radii.begin(), radii.end());
  std::sort(cp.begin(), cp.end());
  cp.erase(std::unique(cp.begin(), cp.end()), cp.end());
  if (!(cp.front() > 0.0)) {
    throw DomainError("OracleGreen: radii must be positive");
  }

  const double r_min = cp.front();
  const double r_max = cp.back();
  const double v = p.system.v();

  // Wronskian sample radii: ends plus the logarithmic midpoint.
  double rw = std::sqrt(r_min * r_max);
  std::vector<double> samples{r_min, rw, r_max};
  for (double r : samples) cp.push_back(r);
  std::sort(cp.begin(), cp.end());
  cp.erase(std::unique(cp.begin(), cp.end()), cp.end());

  double r_start = std::min(1e-6, 0.5 * r_min);
  double r_far = std::max(40.0 / v, r_max + 16.0 / v);

  regular_ = integrate_regular(p, r_start, r_max, cp, opt);
  decaying_ = integrate_decaying(p, r_far, r_min, cp, opt);

  WronskianFrame w0 = wronskian_frame(decaying_, regular_, rw);
  w_raw_ = w0.raw;
  w_scale2_ = w0.scale2;
  drift_ = 0.0;
  for (double r : samples) {
    WronskianFrame wi = wronskian_frame(decaying_, regular_, r);
    double rel = std::abs(std::ldexp(wi.raw, wi.scale2 - w0.scale2) - w0.raw) /
                 std::abs(w0.raw);
    drift_ = std::max(drift_, rel);
  }
}

double OracleGreen::value(double r_b, double r_a) const {
  WronskianFrame w{w_raw_, w_scale2_,
                   1.0};  // ratio re-checked at construction time
  if (std::abs(w_raw_) == 0.0) {
    throw NearPole("OracleGreen: Wronskian vanished");
  }
  return green_from_tables(regular_, decaying_, w, r_b, r_a);
}

double oracle_green(const RadialProblem& p, double r_b, double r_a,
                    const IntegrationOptions& opt) {
  if (!(r_a > 0.0) || r_b < r_a) {
    if (!(r_a > 0.0)) throw DomainError("oracle_green: radii must be positive");
    throw OrderError("oracle_green: needs r_b >= r_a");
  }
  const double radii[] = {r_a, r_b};
  OracleGreen evaluator(p, radii, opt);
  return evaluator.value(r_b, r_a);
}

double wronskian_mismatch(const CoulombSystem& c_template, double epsilon,
                          const IntegrationOptions& opt) {
  CoulombSystem c(epsilon, c_template.coupling, c_template.l, c_template.dim);
  RadialProblem p(c);
  const double v = c.v();
  // Any radius works (the Wronskian is constant); the bound-state scale
  // 1/v keeps both integrations short and well conditioned.
  const double rw = 1.0 / v;
  const double cp[] = {rw};
  SolutionTable reg = integrate_regular(p, std::min(1e-6, 0.5 * rw), rw, cp, opt);
  SolutionTable dec = integrate_decaying(p, rw + 40.0 / v, rw, cp, opt);
  WronskianFrame w = wronskian_frame(dec, reg, rw);
  return std::copysign(w.ratio, w.raw);
}

double find_wronskian_zero(const CoulombSystem& c_template, double eps_lo,
                           double eps_hi, double tol,
                           const IntegrationOptions& opt) {
  double f_lo = wronskian_mismatch(c_template, eps_lo, opt);
  double f_hi = wronskian_mismatch(c_template, eps_hi, opt);
  if (f_lo == 0.0) return eps_lo;
  if (f_hi == 0.0) return eps_hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw DomainError("find_wronskian_zero: no sign change across bracket");
  }
  double lo = eps_lo;
  double hi = eps_hi;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    double f_mid = wronskian_mismatch(c_template, mid, opt);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace dkgreen::kg_oracle
