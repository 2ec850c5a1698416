#pragma once

#include "gqi/types.hpp"

namespace gqi {

inline Mat symmetrize(const Mat& m) { return 0.5 * (m + m.transpose()); }

bool is_symmetric(const Mat& m, double rel_tol = 1e-12);

/// ||a - ref|| / ||ref||, falling back to the absolute norm when ref ~ 0.
double rel_error(const Mat& a, const Mat& ref);
double rel_error(const Vec& a, const Vec& ref);

/// m^exponent for symmetric positive-definite m via eigendecomposition.
/// Throws ValidationError naming `what` if m has a non-positive eigenvalue.
Mat spd_power(const Mat& m, double exponent, const std::string& what);

/// Symplectic eigenvalues of a covariance matrix: the moduli of the
/// eigenvalues of S.cov, returned as d values sorted ascending.
/// All equal 1/2 for a pure state (hbar = 1).
Vec symplectic_eigenvalues(const Mat& cov);

/// || Gamma S Gamma - S ||, zero when Gamma is symplectic in the
/// symmetric sense.
double symplectic_residual(const Mat& gamma);

}  // namespace gqi
