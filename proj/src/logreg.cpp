#include "sgn/logreg.hpp"

#include <cmath>
#include <string>

#include "sgn/graph.hpp"

namespace sgn {

namespace {

double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

void check_inputs(const Eigen::MatrixXd& x, std::span<const int> y) {
  if (static_cast<Eigen::Index>(y.size()) != x.rows()) {
    throw Error("logistic regression: " + std::to_string(y.size()) + " labels for " +
                std::to_string(x.rows()) + " rows");
  }
  for (int v : y) {
    if (v != 0 && v != 1) throw Error("logistic regression labels must be 0 or 1");
  }
}

}  // namespace

double logreg_loss(const Eigen::MatrixXd& x, std::span<const int> y, const Eigen::VectorXd& w,
                   double b, double reg) {
  check_inputs(x, y);
  const Eigen::VectorXd z = (x * w).array() + b;
  double loss = 0.5 * reg * w.squaredNorm();
  for (Eigen::Index i = 0; i < z.size(); ++i) loss += softplus(z(i)) - y[static_cast<std::size_t>(i)] * z(i);
  return loss;
}

Eigen::VectorXd logreg_gradient(const Eigen::MatrixXd& x, std::span<const int> y,
                                const Eigen::VectorXd& w, double b, double reg) {
  check_inputs(x, y);
  const Eigen::Index p = x.cols();
  const Eigen::VectorXd z = (x * w).array() + b;
  Eigen::VectorXd resid(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) resid(i) = sigmoid(z(i)) - y[static_cast<std::size_t>(i)];
  Eigen::VectorXd g(p + 1);
  g.head(p) = x.transpose() * resid + reg * w;
  g(p) = resid.sum();
  return g;
}

LogRegModel train_logreg(const Eigen::MatrixXd& x, std::span<const int> y, const LogRegOptions& opts) {
  check_inputs(x, y);
  int positives = 0;
  for (int v : y) positives += v;
  if (positives == 0 || positives == static_cast<int>(y.size())) {
    throw Error("logistic regression needs both classes in the training set");
  }

  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  LogRegModel m;
  m.reg = opts.reg;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(p);
  double b = 0.0;
  double loss = logreg_loss(x, y, w, b, opts.reg);

  Eigen::MatrixXd xa(n, p + 1);
  xa.leftCols(p) = x;
  xa.col(p).setOnes();

  int it = 0;
  for (; it < opts.max_iter; ++it) {
    const Eigen::VectorXd g = logreg_gradient(x, y, w, b, opts.reg);
    if (g.norm() < opts.grad_tol) {
      m.converged = true;
      break;
    }
    const Eigen::VectorXd z = (x * w).array() + b;
    Eigen::VectorXd weight(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double s = sigmoid(z(i));
      weight(i) = s * (1.0 - s);
    }
    Eigen::MatrixXd h = xa.transpose() * weight.asDiagonal() * xa;
    h.diagonal().head(p).array() += opts.reg;
    // Keeps the intercept row nonsingular when every weight saturates.
    h(p, p) += 1e-12;
    Eigen::VectorXd step = h.ldlt().solve(g);
    if (!step.allFinite()) step = g;

    double t = 1.0;
    bool improved = false;
    for (int half = 0; half < 50; ++half) {
      const Eigen::VectorXd w_try = w - t * step.head(p);
      const double b_try = b - t * step(p);
      const double l_try = logreg_loss(x, y, w_try, b_try, opts.reg);
      if (l_try <= loss - 1e-4 * t * g.dot(step) || l_try < loss) {
        w = w_try;
        b = b_try;
        loss = l_try;
        improved = true;
        break;
      }
      t *= 0.5;
    }
    if (!improved) {
      m.converged = g.norm() < opts.grad_tol * 1e3;
      break;
    }
  }
  if (it == opts.max_iter) m.converged = logreg_gradient(x, y, w, b, opts.reg).norm() < opts.grad_tol;

  m.weights = w;
  m.intercept = b;
  m.final_loss = loss;
  m.iterations = it;
  return m;
}

Eigen::VectorXd LogRegModel::decision(const Eigen::MatrixXd& x) const {
  return (x * weights).array() + intercept;
}

std::vector<int> LogRegModel::predict(const Eigen::MatrixXd& x) const {
  const Eigen::VectorXd z = decision(x);
  std::vector<int> out(static_cast<std::size_t>(z.size()));
  for (Eigen::Index i = 0; i < z.size(); ++i) out[static_cast<std::size_t>(i)] = z(i) > 0 ? 1 : 0;
  return out;
}

}  // namespace sgn
