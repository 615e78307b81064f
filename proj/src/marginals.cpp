#include "qstab/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qstab/quadrature.hpp"
#include "qstab/special_functions.hpp"

namespace qstab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::string family_name(Family f) {
  return f == Family::kBeta ? "beta" : "gamma";
}

MarginalDistribution::MarginalDistribution(Family f, double p1, double p2)
    : family_(f), p1_(p1), p2_(p2) {
  if (!(p1 > 0.0) || !(p2 > 0.0) || !std::isfinite(p1) || !std::isfinite(p2)) {
    throw std::invalid_argument(family_name(f) +
                                " marginal: parameters must be positive");
  }
}

MarginalDistribution MarginalDistribution::beta(double alpha, double beta) {
  return MarginalDistribution(Family::kBeta, alpha, beta);
}

MarginalDistribution MarginalDistribution::gamma(double shape, double scale) {
  return MarginalDistribution(Family::kGamma, shape, scale);
}

double MarginalDistribution::mean() const {
  if (family_ == Family::kBeta) return p1_ / (p1_ + p2_);
  return p1_ * p2_;
}

double MarginalDistribution::variance() const {
  if (family_ == Family::kBeta) {
    const double s = p1_ + p2_;
    return p1_ * p2_ / (s * s * (s + 1.0));
  }
  return p1_ * p2_ * p2_;
}

double MarginalDistribution::support_max() const {
  return family_ == Family::kBeta ? 1.0 : kInf;
}

bool MarginalDistribution::in_support(double x) const {
  if (family_ == Family::kBeta) return x >= 0.0 && x <= 1.0;
  return x > 0.0;
}

double MarginalDistribution::pdf(double x) const {
  const double lp = log_pdf(x);
  return std::exp(lp);
}

double MarginalDistribution::log_pdf(double x) const {
  if (std::isnan(x)) return -kInf;
  if (family_ == Family::kBeta) {
    if (x < 0.0 || x > 1.0) return -kInf;
    if (x == 0.0) {
      if (p1_ < 1.0) return kInf;
      if (p1_ == 1.0) return std::log(p2_);
      return -kInf;
    }
    if (x == 1.0) {
      if (p2_ < 1.0) return kInf;
      if (p2_ == 1.0) return std::log(p1_);
      return -kInf;
    }
    return (p1_ - 1.0) * std::log(x) + (p2_ - 1.0) * std::log1p(-x) -
           sf::log_beta(p1_, p2_);
  }
  // Gamma(shape, scale)
  if (x < 0.0) return -kInf;
  if (x == 0.0) {
    if (p1_ < 1.0) return kInf;
    if (p1_ == 1.0) return -std::log(p2_);
    return -kInf;
  }
  return (p1_ - 1.0) * std::log(x) - x / p2_ - std::lgamma(p1_) -
         p1_ * std::log(p2_);
}

double MarginalDistribution::cdf(double x) const {
  if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (family_ == Family::kBeta) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return sf::inc_beta_reg(p1_, p2_, x);
  }
  if (x <= 0.0) return 0.0;
  return sf::inc_gamma_lower_reg(p1_, x / p2_);
}

double MarginalDistribution::quantile(double u) const {
  if (std::isnan(u) || u < 0.0 || u > 1.0) {
    throw std::domain_error("quantile: u must lie in [0, 1]");
  }
  if (u == 0.0) return 0.0;
  if (u == 1.0) return support_max();

  double lo = 0.0;
  double hi;
  if (family_ == Family::kBeta) {
    hi = 1.0;
  } else {
    hi = mean() + 10.0 * std::sqrt(variance());
    while (cdf(hi) < u && hi < 1e300) hi *= 2.0;
  }

  // Normal-approximation start, safeguarded Newton with bisection fallback.
  double x = mean() + std::sqrt(variance()) * sf::normal_quantile(u);
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);

  for (int it = 0; it < 200; ++it) {
    const double f = cdf(x) - u;
    if (f >= 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    if (std::fabs(f) <= 1e-12) break;
    const double d = pdf(x);
    double xn;
    if (d > 0.0 && std::isfinite(d)) {
      xn = x - f / d;
      if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    } else {
      xn = 0.5 * (lo + hi);
    }
    if (xn == x) break;
    x = xn;
  }
  return x;
}

MarginalDistribution fit_moments(std::span<const double> samples,
                                 Family family) {
  if (samples.size() < 8) {
    throw std::invalid_argument("fit_moments: need at least 8 samples");
  }
  double m = 0.0;
  for (double s : samples) {
    if (family == Family::kBeta ? !(s >= 0.0 && s <= 1.0) : !(s > 0.0)) {
      throw std::invalid_argument("fit_moments: sample outside " +
                                  family_name(family) + " support");
    }
    m += s;
  }
  m /= static_cast<double>(samples.size());
  double v = 0.0;
  for (double s : samples) v += (s - m) * (s - m);
  v /= static_cast<double>(samples.size() - 1);
  if (!(v > 0.0)) {
    throw std::invalid_argument("fit_moments: zero sample variance");
  }

  if (family == Family::kBeta) {
    const double common = m * (1.0 - m) / v - 1.0;
    const double alpha = m * common;
    const double beta = (1.0 - m) * common;
    if (!(alpha > 0.0) || !(beta > 0.0)) {
      throw std::invalid_argument(
          "fit_moments: data implies non-positive beta parameters");
    }
    return MarginalDistribution::beta(alpha, beta);
  }
  const double shape = m * m / v;
  const double scale = v / m;
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw std::invalid_argument(
        "fit_moments: data implies non-positive gamma parameters");
  }
  return MarginalDistribution::gamma(shape, scale);
}

namespace {

// log Bhattacharyya affinity, closed form. Beta:
//   BC = B((a1+a2)/2, (b1+b2)/2) / sqrt(B(a1,b1) B(a2,b2))
// Gamma (shape k, scale th):
//   BC = Gamma(kbar) thbar^kbar / sqrt(prod Gamma(ki) thi^ki),
//   kbar = (k1+k2)/2, thbar = 2 th1 th2 / (th1 + th2).
double log_affinity_closed(const MarginalDistribution& d1,
                           const MarginalDistribution& d2) {
  if (d1.family() == Family::kBeta) {
    return sf::log_beta(0.5 * (d1.param1() + d2.param1()),
                        0.5 * (d1.param2() + d2.param2())) -
           0.5 * (sf::log_beta(d1.param1(), d1.param2()) +
                  sf::log_beta(d2.param1(), d2.param2()));
  }
  const double k1 = d1.param1(), th1 = d1.param2();
  const double k2 = d2.param1(), th2 = d2.param2();
  const double kbar = 0.5 * (k1 + k2);
  const double log_thbar = std::log(2.0) + std::log(th1) + std::log(th2) -
                           std::log(th1 + th2);
  return std::lgamma(kbar) + kbar * log_thbar -
         0.5 * (std::lgamma(k1) + k1 * std::log(th1) + std::lgamma(k2) +
                k2 * std::log(th2));
}

double affinity_quadrature(const MarginalDistribution& d1,
                           const MarginalDistribution& d2) {
  const auto integrand = [&](double x) {
    return std::exp(0.5 * (d1.log_pdf(x) + d2.log_pdf(x)));
  };
  double hi;
  if (d1.family() == Family::kBeta) {
    hi = 1.0;
  } else {
    hi = std::max(d1.quantile(1.0 - 1e-12), d2.quantile(1.0 - 1e-12));
  }
  return integrate_adaptive(integrand, 0.0, hi, 1e-9);
}

}  // namespace

double hellinger_1d(const MarginalDistribution& d1,
                    const MarginalDistribution& d2) {
  if (d1.family() != d2.family()) {
    throw std::invalid_argument("hellinger_1d: family mismatch");
  }
  double log_bc = log_affinity_closed(d1, d2);
  if (!std::isfinite(log_bc) || log_bc > 1e-12) {
    const double bc = affinity_quadrature(d1, d2);
    return std::sqrt(std::clamp(1.0 - bc, 0.0, 1.0));
  }
  if (log_bc > 0.0) log_bc = 0.0;
  const double h2 = -std::expm1(log_bc);  // 1 - BC, precise for small H
  return std::sqrt(std::clamp(h2, 0.0, 1.0));
}

}  // namespace qstab
