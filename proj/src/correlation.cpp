#include "qstab/correlation.hpp"

#include <cmath>
#include <stdexcept>

namespace qstab {

namespace {

constexpr double kEigTol = 1e-10;

double min_eigenvalue_of(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m,
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

CorrelationMatrix::CorrelationMatrix(Eigen::MatrixXd m, double min_eig)
    : m_(std::move(m)), min_eig_(min_eig) {
  is_identity_ = m_.isIdentity(0.0);
}

CorrelationMatrix CorrelationMatrix::identity(int dim) {
  if (dim < 1) throw std::invalid_argument("CorrelationMatrix: dim < 1");
  return CorrelationMatrix(Eigen::MatrixXd::Identity(dim, dim), 1.0);
}

CorrelationMatrix CorrelationMatrix::from_matrix(Eigen::MatrixXd m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("CorrelationMatrix: matrix must be square");
  }
  const int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i) {
    if (std::fabs(m(i, i) - 1.0) > 1e-12) {
      throw std::invalid_argument("CorrelationMatrix: diagonal must be 1");
    }
    for (int j = 0; j < i; ++j) {
      if (std::fabs(m(i, j) - m(j, i)) > 1e-12) {
        throw std::invalid_argument("CorrelationMatrix: matrix not symmetric");
      }
      if (std::fabs(m(i, j)) > 1.0 + 1e-12) {
        throw std::invalid_argument(
            "CorrelationMatrix: entry outside [-1, 1]");
      }
    }
  }
  Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  sym.diagonal().setOnes();
  const double min_eig = min_eigenvalue_of(sym);
  if (min_eig < -kEigTol) {
    throw std::invalid_argument(
        "CorrelationMatrix: matrix is not positive semidefinite");
  }
  return CorrelationMatrix(std::move(sym), min_eig);
}

CorrelationMatrix pearson_matrix(
    const std::vector<std::vector<double>>& series) {
  const int d = static_cast<int>(series.size());
  if (d < 1) throw std::invalid_argument("pearson_matrix: no series");
  const std::size_t n = series[0].size();
  if (n < 8) {
    throw std::invalid_argument("pearson_matrix: need at least 8 samples");
  }
  for (const auto& s : series) {
    if (s.size() != n) {
      throw std::invalid_argument("pearson_matrix: series length mismatch");
    }
  }

  std::vector<double> mean(d, 0.0), sd(d, 0.0);
  for (int j = 0; j < d; ++j) {
    for (double v : series[j]) mean[j] += v;
    mean[j] /= static_cast<double>(n);
    for (double v : series[j]) sd[j] += (v - mean[j]) * (v - mean[j]);
    if (!(sd[j] > 0.0)) {
      throw std::invalid_argument("pearson_matrix: zero variance in series " +
                                  std::to_string(j));
    }
    sd[j] = std::sqrt(sd[j]);
  }

  Eigen::MatrixXd corr = Eigen::MatrixXd::Identity(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < i; ++j) {
      double cov = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        cov += (series[i][k] - mean[i]) * (series[j][k] - mean[j]);
      }
      double r = cov / (sd[i] * sd[j]);
      r = std::clamp(r, -1.0, 1.0);
      corr(i, j) = r;
      corr(j, i) = r;
    }
  }

  const double min_eig = min_eigenvalue_of(corr);
  if (min_eig < -kEigTol) return nearest_psd(corr);
  return CorrelationMatrix::from_matrix(std::move(corr));
}

CorrelationMatrix nearest_psd(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("nearest_psd: matrix must be square");
  }
  const int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i) {
    if (std::fabs(m(i, i) - 1.0) > 1e-12) {
      throw std::invalid_argument("nearest_psd: diagonal must be 1");
    }
    for (int j = 0; j < i; ++j) {
      if (std::fabs(m(i, j) - m(j, i)) > 1e-12) {
        throw std::invalid_argument("nearest_psd: matrix not symmetric");
      }
    }
  }

  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.eigenvalues().minCoeff() >= 0.0) {
    Eigen::MatrixXd out = sym;
    out.diagonal().setOnes();
    return CorrelationMatrix::from_matrix(std::move(out));
  }

  const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
  Eigen::MatrixXd repaired = es.eigenvectors() * clipped.asDiagonal() *
                             es.eigenvectors().transpose();
  repaired = 0.5 * (repaired + repaired.transpose());

  // Renormalize to unit diagonal: D^-1/2 A D^-1/2 keeps PSD.
  Eigen::VectorXd dinv(n);
  for (int i = 0; i < n; ++i) {
    const double dii = repaired(i, i);
    if (!(dii > 0.0)) {
      throw std::invalid_argument(
          "nearest_psd: degenerate matrix, zero diagonal after clipping");
    }
    dinv(i) = 1.0 / std::sqrt(dii);
  }
  repaired = dinv.asDiagonal() * repaired * dinv.asDiagonal();
  repaired = 0.5 * (repaired + repaired.transpose());
  repaired.diagonal().setOnes();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const double r = std::clamp(repaired(i, j), -1.0, 1.0);
      repaired(i, j) = r;
      repaired(j, i) = r;
    }
  }
  return CorrelationMatrix::from_matrix(std::move(repaired));
}

}  // namespace qstab
