#pragma once

#include <vector>

#include "lognls/types.hpp"

namespace lognls {

// Parameters of the dispersion ODE
//   tau'' = 2 lambda / tau + [cubic] / tau^3 - Omega tau,
// with Omega = omega^2 (confining), -omega^2 (repulsive) or 0 (free).
struct TauParams {
  double lambda = 1.0;
  double Omega = 0.0;
  bool include_cubic = true;
  double tau0 = 1.0;
  double tau1 = 0.0;
};

struct TauTrajectory {
  std::vector<double> times;    // uniform grid, spacing h
  std::vector<double> tau;      // > 0
  std::vector<double> tau_dot;
  double C0 = 0.0;              // first-integral constant from initial data
  TauParams params;

  double h() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
  double t_end() const { return times.back(); }

  // Cubic Hermite interpolation on the stored grid (O(h^4) accurate).
  double tau_at(double t) const;
  double tau_dot_at(double t) const;
};

// RHS value tau'' at a given tau.
inline double tau_accel(const TauParams& p, double tau) {
  double a = 2.0 * p.lambda / tau - p.Omega * tau;
  if (p.include_cubic) a += 1.0 / (tau * tau * tau);
  return a;
}

// First integral: (tau')^2 = C0 + 4 lambda ln(tau) - [cubic]/tau^2 - Omega tau^2.
inline double first_integral_rhs(const TauParams& p, double C0, double tau) {
  double v = C0 + 4.0 * p.lambda * std::log(tau) - p.Omega * tau * tau;
  if (p.include_cubic) v -= 1.0 / (tau * tau);
  return v;
}

// Fixed-step RK4 on [0, t_end]; every `stride`-th point is stored (the final
// point always is). Throws SingularityError if tau falls below a dt-scale
// threshold, and SingularityError on overflow of tau.
TauTrajectory integrate_tau(const TauParams& params, double t_end, double dt,
                            long stride = 1);

// Pointwise residual of the first integral along a trajectory.
std::vector<double> first_integral_residual(const TauTrajectory& traj);

double max_first_integral_residual(const TauTrajectory& traj);

// Ratios tau(t) / (2 t sqrt(lambda ln t)) for the free ODE started at (1,0);
// entries with t <= e are skipped. Approaches 1 for large t.
std::vector<double> free_rate_check(const TauTrajectory& traj);

// Same for tau_dot(t) / (2 sqrt(lambda ln t)).
std::vector<double> free_rate_check_dot(const TauTrajectory& traj);

struct MuEstimate {
  double value = 0.0;
  double tolerance = 0.0;  // reported convergence / truncation bound
  bool converged = false;
};

// mu_infinity = lim tau(t) e^{-omega t} for a repulsive trajectory
// (params.Omega = -omega^2 < 0), estimated as mu(t_end). Convergence is
// judged by |mu(t_end) - mu(t_end/2)| <= tol; throws ToleranceNotMet otherwise.
MuEstimate mu_infinity_limit(const TauTrajectory& traj, double tol = 1e-8);

// Integral expression
//   mu_infinity = tau0 + tau1/omega
//               + (1/2omega) int_0^inf e^{-omega r} (2 lambda/tau + [cubic]/tau^3) dr,
// trapezoid on the stored grid plus the analytic exponential tail estimate.
MuEstimate mu_infinity_integral(const TauTrajectory& traj, double tail_tol = 1e-6);

}  // namespace lognls
