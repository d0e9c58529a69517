#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace lognls {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

constexpr Complex kImag{0.0, 1.0};

// log of exact zeros is clamped at this density floor before taking ln
constexpr double kDensityFloor = 1e-300;

inline double log_floored(double rho) {
  return std::log(rho < kDensityFloor ? kDensityFloor : rho);
}

struct NoGaussonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ToleranceNotMet : std::runtime_error {
  double residual;
  ToleranceNotMet(const std::string& what, double res)
      : std::runtime_error(what), residual(res) {}
};

struct NumericalBlowup : std::runtime_error {
  long step;
  NumericalBlowup(const std::string& what, long step_index)
      : std::runtime_error(what), step(step_index) {}
};

}  // namespace lognls
