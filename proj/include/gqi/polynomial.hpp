#pragma once

#include <array>
#include <vector>

namespace gqi {

/// Real polynomial in monomial basis, coefficients ascending in power.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> coeffs);

  /// The default blend p(tau) = 10 tau^3 - 15 tau^4 + 6 tau^5.
  static Polynomial quintic_blend();
  /// The shape bump envelope tau^3 (1 - tau)^3.
  static Polynomial bump_envelope();

  /// Value and first two derivatives at x, evaluated by Horner's scheme.
  std::array<double, 3> eval012(double x) const;
  double operator()(double x) const { return eval012(x)[0]; }

  const std::vector<double>& coefficients() const { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

/// Blend function p(tau) on [0,1] with p(0)=0, p(1)=1 and vanishing first
/// and second derivatives at both ends. Custom coefficients are checked
/// numerically at construction.
class BlendPolynomial {
 public:
  BlendPolynomial();  // default quintic
  explicit BlendPolynomial(std::vector<double> coeffs);

  /// (p, dp/dtau, d2p/dtau2); throws ValidationError outside [0,1].
  std::array<double, 3> eval(double tau) const;

  const Polynomial& polynomial() const { return poly_; }

 private:
  Polynomial poly_;
};

}  // namespace gqi
