#ifndef QSTAB_SPECIAL_FUNCTIONS_HPP
#define QSTAB_SPECIAL_FUNCTIONS_HPP

namespace qstab::sf {

/// log of the Beta function B(a, b), a > 0, b > 0.
double log_beta(double a, double b);

/// Regularized incomplete beta function I_x(a, b) for a, b > 0, x in [0, 1].
/// Continued-fraction evaluation, switching to Gauss-Legendre quadrature
/// when both parameters are large. Accurate to ~1e-14 relative.
double inc_beta_reg(double a, double b, double x);

/// Regularized lower incomplete gamma function P(a, x), a > 0, x >= 0.
double inc_gamma_lower_reg(double a, double x);

/// Standard normal CDF, computed via erfc for full tail accuracy.
double normal_cdf(double z);

/// Standard normal quantile (inverse CDF). Rational approximation with
/// Halley refinement; relative accuracy ~1e-15 on (0, 1).
/// Returns -inf / +inf at p = 0 / 1, throws std::domain_error outside [0, 1].
double normal_quantile(double p);

}  // namespace qstab::sf

#endif
