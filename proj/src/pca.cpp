#include "sgn/pca.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sgn/graph.hpp"

namespace sgn {

void standardization(const Eigen::MatrixXd& x, Eigen::RowVectorXd& mean, Eigen::RowVectorXd& scale) {
  const double n = static_cast<double>(x.rows());
  mean = x.colwise().mean();
  scale.resize(x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double ss = (x.col(j).array() - mean(j)).square().sum();
    const double sd = n > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    scale(j) = sd < 1e-12 ? 1.0 : sd;
  }
}

PcaModel fit_pca(const Eigen::MatrixXd& x, Eigen::Index dim) {
  if (x.rows() < 2) throw Error("PCA needs at least two rows");
  if (dim < 1 || dim > x.cols()) {
    throw Error("PCA target dimension " + std::to_string(dim) + " outside [1, " +
                std::to_string(x.cols()) + "]");
  }
  PcaModel m;
  standardization(x, m.mean, m.scale);
  const Eigen::MatrixXd z =
      (x.rowwise() - m.mean).array().rowwise() / m.scale.array();

  Eigen::BDCSVD<Eigen::MatrixXd> svd(z, Eigen::ComputeThinV);
  const Eigen::Index keep = std::min<Eigen::Index>(dim, svd.matrixV().cols());
  m.components = svd.matrixV().leftCols(keep).transpose();
  m.explained_variance =
      svd.singularValues().head(keep).array().square() / static_cast<double>(x.rows() - 1);

  for (Eigen::Index i = 0; i < keep; ++i) {
    Eigen::Index arg = 0;
    m.components.row(i).cwiseAbs().maxCoeff(&arg);
    if (m.components(i, arg) < 0) m.components.row(i) *= -1.0;
  }
  return m;
}

Eigen::MatrixXd apply_pca(const PcaModel& m, const Eigen::MatrixXd& x) {
  if (x.cols() != m.input_dim()) {
    throw Error("PCA input has " + std::to_string(x.cols()) + " columns, model expects " +
                std::to_string(m.input_dim()));
  }
  const Eigen::MatrixXd z = (x.rowwise() - m.mean).array().rowwise() / m.scale.array();
  return z * m.components.transpose();
}

}  // namespace sgn
