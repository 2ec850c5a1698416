#include "gqi/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace gqi {

bool is_symmetric(const Mat& m, double rel_tol) {
  const double scale = std::max(m.norm(), 1e-300);
  return (m - m.transpose()).norm() <= rel_tol * scale;
}

double rel_error(const Mat& a, const Mat& ref) {
  const double n = ref.norm();
  return n > 0.0 ? (a - ref).norm() / n : (a - ref).norm();
}

double rel_error(const Vec& a, const Vec& ref) {
  const double n = ref.norm();
  return n > 0.0 ? (a - ref).norm() / n : (a - ref).norm();
}

Mat spd_power(const Mat& m, double exponent, const std::string& what) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition failed for " + what);
  }
  Vec lam = es.eigenvalues();
  if (lam.minCoeff() <= 0.0) {
    throw ValidationError(what + " is not positive definite");
  }
  for (int i = 0; i < lam.size(); ++i) lam[i] = std::pow(lam[i], exponent);
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

Vec symplectic_eigenvalues(const Mat& cov) {
  const int d = static_cast<int>(cov.rows()) / 2;
  const Mat sc = symplectic_form(d) * cov;
  Eigen::EigenSolver<Mat> es(sc);
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition failed for symplectic spectrum");
  }
  // Eigenvalues come in +-i nu pairs; collect the d distinct moduli.
  std::vector<double> mods(2 * d);
  for (int i = 0; i < 2 * d; ++i) mods[i] = std::abs(es.eigenvalues()[i]);
  std::sort(mods.begin(), mods.end());
  Vec out(d);
  for (int i = 0; i < d; ++i) out[i] = 0.5 * (mods[2 * i] + mods[2 * i + 1]);
  return out;
}

double symplectic_residual(const Mat& gamma) {
  const int d = static_cast<int>(gamma.rows()) / 2;
  const Mat s = symplectic_form(d);
  return (gamma * s * gamma - s).norm();
}

}  // namespace gqi
