#pragma once

#include <cmath>
#include <vector>

#include "lognls/types.hpp"

namespace lognls {

enum class PotentialClass { Free, Confining, Partial, Repulsive, Saddle };

struct AxisPotential {
  int sign = 0;       // -1, 0, +1
  double omega = 0.0; // >= 0; stored as 0 when sign == 0
};

// Diagonal quadratic plus linear potential,
//   V(x) = sum_j sign_j omega_j^2 x_j^2 / 2 + E.x
// Immutable after construction; safe to share between threads.
struct PotentialSpec {
  std::vector<AxisPotential> axes;
  Vector linear;  // E, one entry per axis

  int dim() const { return static_cast<int>(axes.size()); }

  // Signed curvature Omega_j = sign_j * omega_j^2 of axis j.
  double curvature(int j) const {
    const auto& ax = axes[static_cast<size_t>(j)];
    return ax.sign * ax.omega * ax.omega;
  }

  static PotentialSpec free_space(int d) {
    PotentialSpec s;
    s.axes.assign(static_cast<size_t>(d), AxisPotential{});
    s.linear = Vector::Zero(d);
    return s;
  }

  static PotentialSpec isotropic(int d, int sign, double omega) {
    PotentialSpec s = free_space(d);
    for (auto& ax : s.axes) {
      ax.sign = sign;
      ax.omega = sign == 0 ? 0.0 : omega;
    }
    return s;
  }
};

inline double eval_potential(const PotentialSpec& spec, const Vector& x) {
  if (x.size() != spec.dim())
    throw std::invalid_argument("eval_potential: dimension mismatch");
  double v = 0.0;
  for (int j = 0; j < spec.dim(); ++j)
    v += 0.5 * spec.curvature(j) * x[j] * x[j];
  v += spec.linear.dot(x);
  return v;
}

inline PotentialClass classify(const PotentialSpec& spec) {
  int plus = 0, zero = 0, minus = 0;
  for (const auto& ax : spec.axes)
    (ax.sign > 0 ? plus : ax.sign < 0 ? minus : zero)++;
  if (plus > 0 && minus == 0 && zero == 0) return PotentialClass::Confining;
  if (plus > 0 && minus == 0) return PotentialClass::Partial;
  if (minus > 0 && plus == 0 && zero == 0) return PotentialClass::Repulsive;
  if (plus > 0 && minus > 0) return PotentialClass::Saddle;
  return PotentialClass::Free;
}

// Width k of the L^2 Gausson in a harmonic trap of frequency omega:
// the positive root of k^2 + 2 lambda k = omega^2.
inline double gausson_width(double lambda, double omega) {
  const double disc = lambda * lambda + omega * omega;
  const double k = -lambda + std::sqrt(disc);
  if (!(k > 0.0))
    throw NoGaussonError("gausson_width: no positive root (lambda > 0, omega = 0)");
  return k;
}

}  // namespace lognls
