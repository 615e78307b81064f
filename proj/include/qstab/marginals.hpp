#ifndef QSTAB_MARGINALS_HPP
#define QSTAB_MARGINALS_HPP

#include <span>
#include <string>

namespace qstab {

enum class Family { kBeta, kGamma };

std::string family_name(Family f);

/// Parametric 1-D distribution for a device metric: Beta(alpha, beta) on
/// [0, 1] for fidelity-like metrics, Gamma(shape, scale) on (0, inf) for
/// coherence times. Immutable after construction.
class MarginalDistribution {
 public:
  static MarginalDistribution beta(double alpha, double beta);
  static MarginalDistribution gamma(double shape, double scale);

  Family family() const { return family_; }
  /// alpha (Beta) or shape (Gamma).
  double param1() const { return p1_; }
  /// beta (Beta) or scale (Gamma).
  double param2() const { return p2_; }

  double mean() const;
  double variance() const;
  double support_min() const { return 0.0; }
  double support_max() const;
  bool in_support(double x) const;

  /// Density at x; 0 outside the support (total on the reals).
  double pdf(double x) const;
  /// log pdf(x); -inf outside the support.
  double log_pdf(double x) const;
  /// P(X <= x), absolute accuracy <= 1e-10.
  double cdf(double x) const;
  /// Inverse CDF: x with |cdf(x) - u| <= 1e-9. Throws std::domain_error for
  /// u outside [0, 1]. Safeguarded Newton on the CDF.
  double quantile(double u) const;

 private:
  MarginalDistribution(Family f, double p1, double p2);
  Family family_;
  double p1_;
  double p2_;
};

/// Method-of-moments fit. Requires >= 8 samples with positive variance, all
/// inside the family support; throws std::invalid_argument when the data is
/// degenerate or implies non-positive parameters.
MarginalDistribution fit_moments(std::span<const double> samples,
                                 Family family);

/// Hellinger distance between two same-family marginals, in [0, 1].
/// Closed form through the Bhattacharyya affinity in log space, with a
/// numeric-quadrature fallback when the closed form degenerates.
double hellinger_1d(const MarginalDistribution& d1,
                    const MarginalDistribution& d2);

}  // namespace qstab

#endif
