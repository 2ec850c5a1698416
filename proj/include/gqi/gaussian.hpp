#pragma once

#include "gqi/types.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace gqi {

/// Quadratic Hamiltonian as a function of time.
using HamiltonianSchedule = std::function<QuadraticHamiltonian(double)>;

/// Phase-space Hessian and linear coefficient of H:
/// Omega = [[m M, 0], [0, 1/m]], V = [-F; 0].
std::pair<Mat, Vec> hamiltonian_matrices(const QuadraticHamiltonian& h);

/// Ground state of H: mean [(mM)^{-1} F; 0], covariance blocks
/// Sigma_xx = M^{-1/2}/(2m), Sigma_pp = (m/2) M^{1/2}, Sigma_xp = 0.
/// Throws ValidationError("no bound ground state") if M is not positive
/// definite.
GaussianState ground_state(const QuadraticHamiltonian& h);

struct Trajectory {
  TimeGrid grid;
  std::vector<GaussianState> states;  // one per grid point

  const GaussianState& final_state() const { return states.back(); }
};

/// Integrates Xdot = S(Omega X + V), Sigmadot = Sigma Omega S - S Omega Sigma
/// with classic fixed-step 4th-order steps over the grid. The covariance is
/// re-symmetrized after every step. Throws NumericalError naming the grid
/// index if a non-finite value appears.
Trajectory propagate(const GaussianState& initial, const HamiltonianSchedule& schedule,
                     const TimeGrid& grid);

struct MatchReport {
  double cov_rel_error = 0.0;           // ||Sigma_a - Sigma_b|| / ||Sigma_b||
  double cov_rel_error_position = 0.0;  // same, restricted to the position block
  double mean_offset_widths = 0.0;      // ||X_a - X_b|| / smallest position std dev of b
  double tolerance = 0.0;
  bool pass = false;
};

MatchReport state_match(const GaussianState& a, const GaussianState& b,
                        double tolerance = 1e-6);

}  // namespace gqi
