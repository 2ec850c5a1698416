#include "gqi/gaussian.hpp"

#include "gqi/linalg.hpp"

#include <cmath>
#include <string>

namespace gqi {

std::pair<Mat, Vec> hamiltonian_matrices(const QuadraticHamiltonian& h) {
  const int d = h.dim();
  Mat omega = Mat::Zero(2 * d, 2 * d);
  omega.topLeftCorner(d, d) = h.mass * h.curvature;
  omega.bottomRightCorner(d, d) = Mat::Identity(d, d) / h.mass;
  Vec v = Vec::Zero(2 * d);
  v.head(d) = -h.force;
  return {omega, v};
}

GaussianState ground_state(const QuadraticHamiltonian& h) {
  const int d = h.dim();
  Eigen::SelfAdjointEigenSolver<Mat> es(h.curvature);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw ValidationError("no bound ground state");
  }
  const Mat sqrt_m = es.operatorSqrt();
  const Mat inv_sqrt_m = es.operatorInverseSqrt();

  GaussianState g;
  g.mean = Vec::Zero(2 * d);
  g.mean.head(d) = (h.mass * h.curvature).ldlt().solve(h.force);
  g.cov = Mat::Zero(2 * d, 2 * d);
  g.cov.topLeftCorner(d, d) = inv_sqrt_m / (2.0 * h.mass);
  g.cov.bottomRightCorner(d, d) = 0.5 * h.mass * sqrt_m;
  return g;
}

namespace {

struct Deriv {
  Vec mean;
  Mat cov;
};

Deriv phase_space_derivative(const QuadraticHamiltonian& h, const Mat& s,
                             const Vec& mean, const Mat& cov) {
  auto [omega, v] = hamiltonian_matrices(h);
  Deriv d;
  d.mean = s * (omega * mean + v);  // gradient of H evaluated at the center
  d.cov = cov * omega * s - s * omega * cov;
  return d;
}

}  // namespace

Trajectory propagate(const GaussianState& initial, const HamiltonianSchedule& schedule,
                     const TimeGrid& grid) {
  const int d = initial.dim();
  const Mat s = symplectic_form(d);
  const double h = grid.step();

  Trajectory out{grid, {}};
  out.states.reserve(grid.points);
  out.states.push_back(initial);

  Vec x = initial.mean;
  Mat sigma = initial.cov;
  for (int k = 0; k + 1 < grid.points; ++k) {
    const double t = grid.at(k);
    const QuadraticHamiltonian h0 = schedule(t);
    const QuadraticHamiltonian h_mid = schedule(t + 0.5 * h);
    const QuadraticHamiltonian h1 = schedule(t + h);

    const Deriv k1 = phase_space_derivative(h0, s, x, sigma);
    const Deriv k2 = phase_space_derivative(h_mid, s, x + 0.5 * h * k1.mean,
                                            sigma + 0.5 * h * k1.cov);
    const Deriv k3 = phase_space_derivative(h_mid, s, x + 0.5 * h * k2.mean,
                                            sigma + 0.5 * h * k2.cov);
    const Deriv k4 = phase_space_derivative(h1, s, x + h * k3.mean, sigma + h * k3.cov);

    x += (h / 6.0) * (k1.mean + 2.0 * k2.mean + 2.0 * k3.mean + k4.mean);
    sigma += (h / 6.0) * (k1.cov + 2.0 * k2.cov + 2.0 * k3.cov + k4.cov);
    sigma = symmetrize(sigma);

    if (!x.allFinite() || !sigma.allFinite()) {
      throw NumericalError("propagation produced non-finite values at grid index " +
                           std::to_string(k + 1));
    }
    out.states.push_back({x, sigma});
  }
  return out;
}

MatchReport state_match(const GaussianState& a, const GaussianState& b, double tolerance) {
  if (a.dim() != b.dim()) {
    throw ValidationError("state_match: dimension mismatch");
  }
  const int d = b.dim();

  MatchReport r;
  r.tolerance = tolerance;
  r.cov_rel_error = rel_error(a.cov, b.cov);
  r.cov_rel_error_position =
      rel_error(Mat(a.cov.topLeftCorner(d, d)), Mat(b.cov.topLeftCorner(d, d)));

  Eigen::SelfAdjointEigenSolver<Mat> es(b.cov.topLeftCorner(d, d));
  const double smallest_width = std::sqrt(std::max(es.eigenvalues().minCoeff(), 0.0));
  if (smallest_width <= 0.0) {
    throw ValidationError("state_match: reference state has no positive position width");
  }
  r.mean_offset_widths = (a.mean - b.mean).norm() / smallest_width;
  r.pass = r.cov_rel_error <= tolerance && r.mean_offset_widths <= tolerance;
  return r;
}

}  // namespace gqi
