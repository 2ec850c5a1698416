#include "gqi/polynomial.hpp"

#include "gqi/types.hpp"

#include <cmath>

namespace gqi {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_ = {0.0};
}

Polynomial Polynomial::quintic_blend() { return Polynomial({0, 0, 0, 10, -15, 6}); }

Polynomial Polynomial::bump_envelope() { return Polynomial({0, 0, 0, 1, -3, 3, -1}); }

std::array<double, 3> Polynomial::eval012(double x) const {
  double p = 0.0, dp = 0.0, d2p = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    d2p = d2p * x + 2.0 * dp;
    dp = dp * x + p;
    p = p * x + *it;
  }
  return {p, dp, d2p};
}

BlendPolynomial::BlendPolynomial() : poly_(Polynomial::quintic_blend()) {}

BlendPolynomial::BlendPolynomial(std::vector<double> coeffs) : poly_(std::move(coeffs)) {
  const auto at0 = poly_.eval012(0.0);
  const auto at1 = poly_.eval012(1.0);
  const double worst =
      std::max({std::abs(at0[0]), std::abs(at1[0] - 1.0), std::abs(at0[1]),
                std::abs(at1[1]), std::abs(at0[2]), std::abs(at1[2])});
  if (worst > 1e-12) {
    throw ValidationError("blend polynomial violates boundary conditions (residual " +
                          std::to_string(worst) + ")");
  }
}

std::array<double, 3> BlendPolynomial::eval(double tau) const {
  if (tau < 0.0 || tau > 1.0) {
    throw ValidationError("blend argument outside [0,1]: " + std::to_string(tau));
  }
  return poly_.eval012(tau);
}

}  // namespace gqi
