#pragma once

#include <Eigen/Dense>

namespace sgn {

/// z-score standardisation followed by projection onto the leading
/// principal axes of the standardised data.
struct PcaModel {
  Eigen::RowVectorXd mean;
  Eigen::RowVectorXd scale;        // sample std, 1 for zero-variance columns
  Eigen::MatrixXd components;      // dim x features, orthonormal rows
  Eigen::VectorXd explained_variance;  // descending

  Eigen::Index dim() const { return components.rows(); }
  Eigen::Index input_dim() const { return mean.cols(); }
};

/// Per-column mean and sample standard deviation; deviations below 1e-12
/// become 1 so constant columns map to zero.
void standardization(const Eigen::MatrixXd& x, Eigen::RowVectorXd& mean, Eigen::RowVectorXd& scale);

/// Requires at least two rows and 1 <= dim <= columns. When there are fewer
/// rows than requested dimensions the model keeps min(dim, rows) axes; the
/// dropped axes carry no training variance. Each component is signed so its
/// largest-magnitude entry is positive.
PcaModel fit_pca(const Eigen::MatrixXd& x, Eigen::Index dim);

Eigen::MatrixXd apply_pca(const PcaModel& model, const Eigen::MatrixXd& x);

}  // namespace sgn
