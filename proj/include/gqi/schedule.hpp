#pragma once

#include "gqi/polynomial.hpp"
#include "gqi/types.hpp"

#include <string>
#include <vector>

namespace gqi {

struct MatrixDerivatives {
  Mat value, first, second;
};

struct VectorDerivatives {
  Vec value, first, second;
};

/// Shape schedule R(t) = (1 - p(tau)) R_i + p(tau) R_f + e(tau) R_c with
/// tau = t/T and envelope e(tau) = tau^3 (1-tau)^3 by default. Derivatives
/// are analytic (chain rule in tau, with the 1/T factors), never
/// finite-differenced, so that endpoint conditions hold to machine
/// precision. R(t) is required to stay symmetric positive definite; this
/// is checked on a sampling grid at construction.
class ShapeSchedule {
 public:
  ShapeSchedule(Mat r_initial, Mat r_final, Mat r_bump, BlendPolynomial blend,
                double duration, Polynomial envelope = Polynomial::bump_envelope(),
                int positivity_samples = 1024);

  /// (R, Rdot, Rddot) at t in [0, T]. Throws ValidationError naming t if
  /// the evaluated R is not positive definite.
  MatrixDerivatives eval(double t) const;

  int dim() const { return static_cast<int>(r_initial_.rows()); }
  double duration() const { return duration_; }

 private:
  MatrixDerivatives eval_unchecked(double t) const;

  Mat r_initial_, r_final_, r_bump_;
  BlendPolynomial blend_;
  double duration_;
  Polynomial envelope_;
};

/// Ion trajectory L(t): either the quarter-circle arc
/// L = r [sin(pi p/2), cos(pi p/2)] or per-component polynomials in tau.
/// Construction verifies Ldot and Lddot vanish at both endpoints.
class PathSchedule {
 public:
  static PathSchedule arc(double radius, BlendPolynomial blend, double duration);
  static PathSchedule polynomial(std::vector<Polynomial> components, double duration);

  VectorDerivatives eval(double t) const;

  int dim() const;
  double duration() const { return duration_; }
  bool is_arc() const { return arc_; }
  double radius() const { return radius_; }

 private:
  PathSchedule() = default;

  bool arc_ = false;
  double radius_ = 0.0;
  BlendPolynomial blend_;
  std::vector<Polynomial> components_;
  double duration_ = 0.0;
};

struct BoundaryCheck {
  std::string condition;
  double time = 0.0;
  double residual = 0.0;
  bool pass = false;
};

struct BoundaryReport {
  std::vector<BoundaryCheck> checks;
  double tolerance = 0.0;
  double max_residual = 0.0;
  bool all_pass = false;
};

/// Checks, at t in {0, T}: R = M^{-1/4}, Rdot = 0, Rddot = 0,
/// L = (mM)^{-1} F, Ldot = 0, Lddot = 0 against the endpoint Hamiltonians.
/// Never throws for failing conditions; the report carries the residuals.
BoundaryReport validate_boundaries(const ShapeSchedule& shape, const PathSchedule& path,
                                   const QuadraticHamiltonian& initial,
                                   const QuadraticHamiltonian& target,
                                   double tolerance = 1e-9);

}  // namespace gqi
