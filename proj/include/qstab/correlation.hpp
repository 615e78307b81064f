#ifndef QSTAB_CORRELATION_HPP
#define QSTAB_CORRELATION_HPP

#include <Eigen/Dense>
#include <vector>

namespace qstab {

/// Symmetric, unit-diagonal, positive-semidefinite matrix with entries in
/// [-1, 1]. Construction validates; min eigenvalue >= -1e-10 is tolerated
/// (tiny negatives are an artifact of finite-precision eigensolves).
class CorrelationMatrix {
 public:
  static CorrelationMatrix identity(int dim);
  /// Validates and adopts m; throws std::invalid_argument on violation.
  static CorrelationMatrix from_matrix(Eigen::MatrixXd m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double min_eigenvalue() const { return min_eig_; }
  bool is_identity() const { return is_identity_; }

 private:
  CorrelationMatrix(Eigen::MatrixXd m, double min_eig);
  Eigen::MatrixXd m_;
  double min_eig_;
  bool is_identity_;
};

/// Pearson correlation of aligned series (one vector per variable, equal
/// lengths >= 8, positive variance each), followed by PSD repair when the
/// raw estimate is indefinite. Diagonal is exactly 1.
CorrelationMatrix pearson_matrix(
    const std::vector<std::vector<double>>& series);

/// Nearest-PSD repair by eigenvalue clipping: negative eigenvalues set to 0,
/// re-symmetrized, diagonal renormalized to 1. Input must be symmetric with
/// unit diagonal.
CorrelationMatrix nearest_psd(const Eigen::MatrixXd& m);

}  // namespace qstab

#endif
