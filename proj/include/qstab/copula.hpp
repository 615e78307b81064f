#ifndef QSTAB_COPULA_HPP
#define QSTAB_COPULA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qstab/correlation.hpp"
#include "qstab/marginals.hpp"

namespace qstab {

/// One draw of the device noise parameters, ordered by metric index.
using ParameterSample = std::vector<double>;

/// A Monte Carlo point estimate with its standard error.
struct MonteCarloEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Joint distribution of the device metrics for one epoch: a Gaussian
/// copula over per-metric marginals. Immutable; the correlation factor and
/// precision matrix are precomputed at construction. The copula density is
/// the multivariate normal density at z = Phi^-1(u) divided by the product
/// of standard normal densities, which keeps the joint a proper density.
class CopulaModel {
 public:
  CopulaModel(std::vector<MarginalDistribution> marginals,
              CorrelationMatrix sigma, std::string epoch_label);

  int dim() const { return static_cast<int>(marginals_.size()); }
  const MarginalDistribution& marginal(int j) const { return marginals_[j]; }
  const std::vector<MarginalDistribution>& marginals() const {
    return marginals_;
  }
  const CorrelationMatrix& sigma() const { return sigma_; }
  const std::string& epoch_label() const { return label_; }
  double condition_number() const { return cond_; }

  /// Copy with one marginal replaced (same correlation structure).
  CopulaModel with_marginal(int j, MarginalDistribution replacement,
                            std::string new_label) const;

  /// Joint density at x; 0 outside the support. Throws std::domain_error
  /// when the correlation matrix is singular beyond tolerance
  /// (condition number > 1e12).
  double density(const ParameterSample& x) const;
  /// log density; -inf outside the support. Same error contract as density.
  double log_density(const ParameterSample& x) const;

  /// Draw the sample with the given index. Counter-based: the result is a
  /// pure function of (model, seed, index), so any partitioning of indices
  /// across threads yields identical output.
  ParameterSample sample_one(std::uint64_t seed, std::uint64_t index) const;

  /// n draws, deterministic per seed, evaluated in parallel.
  std::vector<ParameterSample> sample(std::int64_t n,
                                      std::uint64_t seed) const;

 private:
  std::vector<MarginalDistribution> marginals_;
  CorrelationMatrix sigma_;
  std::string label_;
  Eigen::MatrixXd factor_;            // F with F F^T = Sigma
  Eigen::MatrixXd precision_minus_i_; // Sigma^-1 - I (zero when Sigma = I)
  double log_det_ = 0.0;
  double cond_ = 1.0;

  void require_density_usable() const;
};

/// Monte Carlo Hellinger distance between two same-dimension models:
/// importance-sampling estimate of the Bhattacharyya affinity
/// BC = E_{x~m1}[sqrt(f2(x)/f1(x))], H = sqrt(max(0, 1 - BC)), with the
/// standard error propagated through the square root (delta method).
/// Throws std::runtime_error if more than 1% of sampled points fall where
/// m1 has zero density (support mismatch).
MonteCarloEstimate hellinger_nd(const CopulaModel& m1, const CopulaModel& m2,
                                std::int64_t n, std::uint64_t seed);

}  // namespace qstab

#endif
