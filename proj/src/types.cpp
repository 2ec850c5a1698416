#include "gqi/types.hpp"

#include "gqi/linalg.hpp"

namespace gqi {

Mat symplectic_form(int dim) {
  Mat s = Mat::Zero(2 * dim, 2 * dim);
  s.topRightCorner(dim, dim) = Mat::Identity(dim, dim);
  s.bottomLeftCorner(dim, dim) = -Mat::Identity(dim, dim);
  return s;
}

QuadraticHamiltonian::QuadraticHamiltonian(double mass, Mat curvature, Vec force)
    : mass(mass), curvature(std::move(curvature)), force(std::move(force)) {
  if (mass <= 0.0) throw ValidationError("hamiltonian mass must be positive");
  if (this->curvature.rows() != this->curvature.cols() ||
      this->curvature.rows() != this->force.size()) {
    throw ValidationError("hamiltonian curvature/force dimensions disagree");
  }
  if (!is_symmetric(this->curvature)) {
    throw ValidationError("hamiltonian curvature matrix is not symmetric");
  }
}

Mat QuadraticInvariant::quadratic_inverse() const {
  const Mat s = symplectic_form(dim());
  return -s * quadratic * s;
}

TimeGrid::TimeGrid(double start, double stop, int points)
    : start(start), stop(stop), points(points) {
  if (points < 2) throw ValidationError("time grid needs at least 2 points");
  if (!(stop > start)) throw ValidationError("time grid must be increasing");
}

}  // namespace gqi
