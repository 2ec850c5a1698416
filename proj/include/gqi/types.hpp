#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace gqi {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Invalid input or configuration (CLI exit code 1).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical breakdown during a run: reality violation, non-finite
/// values, domain escape (CLI exit code 2).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem failure (CLI exit code 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The canonical symplectic matrix [[0, 1], [-1, 0]] for d degrees of
/// freedom, acting on phase-space vectors ordered (x_1..x_d, p_1..p_d).
Mat symplectic_form(int dim);

/// H = sum_i p_i^2 / (2m) + (m/2) x^T M x - F.x in mass-scaled
/// coordinates (hbar = 1). `curvature` is M (units omega^2), `force` is F.
struct QuadraticHamiltonian {
  double mass = 1.0;
  Mat curvature;
  Vec force;

  QuadraticHamiltonian() = default;
  QuadraticHamiltonian(double mass, Mat curvature, Vec force);

  int dim() const { return static_cast<int>(force.size()); }
};

/// Gaussian state as phase-space mean and covariance.
struct GaussianState {
  Vec mean;  // 2d
  Mat cov;   // 2d x 2d symmetric positive definite

  int dim() const { return static_cast<int>(mean.size()) / 2; }
};

/// Quadratic invariant I = 1/2 X^T Gamma X + W.X + theta, stored as
/// (quadratic, linear, offset).
struct QuadraticInvariant {
  Mat quadratic;       // Gamma, 2d x 2d real symmetric symplectic
  Vec linear;          // W, 2d
  double offset = 0.0; // theta

  int dim() const { return static_cast<int>(linear.size()) / 2; }

  /// Gamma^{-1} = -S Gamma S, valid because Gamma is symplectic.
  Mat quadratic_inverse() const;
};

/// Auxiliary gauge matrices determined by (R, Rdot).
struct GaugeData {
  Mat j;   // real antisymmetric
  CMat a;  // complex anti-Hermitian
};

/// Uniform time grid over [start, stop] with `points` samples inclusive.
struct TimeGrid {
  double start = 0.0;
  double stop = 0.0;
  int points = 0;

  TimeGrid(double start, double stop, int points);
  static TimeGrid over(double duration, int points) { return {0.0, duration, points}; }

  double step() const { return (stop - start) / (points - 1); }
  double at(int k) const { return start + k * step(); }
};

}  // namespace gqi
