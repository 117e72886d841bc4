#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace sgn {

struct LogRegOptions {
  double reg = 1.0;        // L2 strength on weights; the intercept is not penalised
  int max_iter = 200;
  double grad_tol = 1e-6;  // Euclidean norm of the full gradient
};

struct LogRegModel {
  Eigen::VectorXd weights;
  double intercept = 0.0;
  double reg = 1.0;
  double final_loss = 0.0;
  int iterations = 0;
  bool converged = false;

  Eigen::VectorXd decision(const Eigen::MatrixXd& x) const;
  std::vector<int> predict(const Eigen::MatrixXd& x) const;
};

/// sum_i [log(1 + exp(z_i)) - y_i z_i] + reg/2 * |w|^2, z = Xw + b.
double logreg_loss(const Eigen::MatrixXd& x, std::span<const int> y, const Eigen::VectorXd& w,
                   double b, double reg);

/// Gradient of logreg_loss; the last entry is the intercept derivative.
Eigen::VectorXd logreg_gradient(const Eigen::MatrixXd& x, std::span<const int> y,
                                const Eigen::VectorXd& w, double b, double reg);

/// Newton / IRLS from zero weights with backtracking. Throws when y holds a
/// single class or is not in {0, 1}.
LogRegModel train_logreg(const Eigen::MatrixXd& x, std::span<const int> y,
                         const LogRegOptions& opts = {});

}  // namespace sgn
