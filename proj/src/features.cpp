#include "sgn/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace sgn {

double pct_leaf(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) return 0.0;
  std::size_t leaves = 0;
  for (NodeId v = 0; v < n; ++v) leaves += g.degree(v) == 1 ? 1 : 0;
  return static_cast<double>(leaves) / static_cast<double>(n);
}

double avg_clustering(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) return 0.0;
  double total = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    auto nv = g.neighbors(v);
    const std::size_t k = nv.size();
    if (k < 2) continue;
    // Each link among neighbours is seen from both of its endpoints.
    std::size_t twice_links = 0;
    for (NodeId w : nv) {
      auto nw = g.neighbors(w);
      auto a = nv.begin();
      auto b = nw.begin();
      while (a != nv.end() && b != nw.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++twice_links;
          ++a;
          ++b;
        }
      }
    }
    total += static_cast<double>(twice_links) / static_cast<double>(k * (k - 1));
  }
  return total / static_cast<double>(n);
}

double density(const Graph& g) {
  const double n = static_cast<double>(g.num_nodes());
  if (n < 2) return 0.0;
  return 2.0 * static_cast<double>(g.num_links()) / (n * (n - 1.0));
}

double avg_betweenness(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) return 0.0;
  std::vector<double> centrality(n, 0.0);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<long> dist(n);
  std::vector<NodeId> order;
  order.reserve(n);
  std::queue<NodeId> frontier;

  for (NodeId s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1L);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      NodeId u = frontier.front();
      frontier.pop();
      order.push_back(u);
      for (NodeId w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          frontier.push(w);
        }
        if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      NodeId w = *it;
      for (NodeId u : g.neighbors(w)) {
        if (dist[u] == dist[w] - 1) delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) centrality[w] += delta[w];
    }
  }
  double total = 0.0;
  for (double c : centrality) total += c;
  // Every unordered pair was accumulated once from each endpoint.
  return total / 2.0 / static_cast<double>(n);
}

double avg_closeness(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n < 2) return 0.0;
  std::vector<long> dist(n);
  std::queue<NodeId> frontier;
  double total = 0.0;
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1L);
    dist[s] = 0;
    frontier.push(s);
    std::size_t reached = 0;
    long dist_sum = 0;
    while (!frontier.empty()) {
      NodeId u = frontier.front();
      frontier.pop();
      ++reached;
      dist_sum += dist[u];
      for (NodeId w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          frontier.push(w);
        }
      }
    }
    if (reached < 2) continue;
    const double r1 = static_cast<double>(reached - 1);
    total += r1 / static_cast<double>(dist_sum) * r1 / static_cast<double>(n - 1);
  }
  return total / static_cast<double>(n);
}

double avg_neighbor_degree(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) return 0.0;
  double total = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    auto nv = g.neighbors(v);
    if (nv.empty()) continue;
    double sum = 0.0;
    for (NodeId w : nv) sum += static_cast<double>(g.degree(w));
    total += sum / static_cast<double>(nv.size());
  }
  return total / static_cast<double>(n);
}

namespace {

SpectralSummary dense_spectrum(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g));
  if (solver.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed");
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  const Eigen::Index n = values.size();
  const double top = values(n - 1);
  const double cutoff = top - 1e-9 * std::max(1.0, std::abs(top));

  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = n - 1; i >= 0 && values(i) >= cutoff; --i) {
    x += vectors.col(i).dot(ones) * vectors.col(i);
  }
  x.normalize();
  return {top, x.sum() / static_cast<double>(n)};
}

SpectralSummary power_spectrum(const Graph& g, const FeatureConfig& cfg) {
  const std::size_t n = g.num_nodes();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  // Iterating on A + I keeps the dominant eigenvalue strictly largest in
  // magnitude, which also covers bipartite graphs.
  for (int it = 0; it < cfg.power_iter_max; ++it) {
    double norm = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double acc = x[v];
      for (NodeId w : g.neighbors(v)) acc += x[w];
      next[v] = acc;
      norm += acc * acc;
    }
    norm = std::sqrt(norm);
    double change = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      next[v] /= norm;
      change = std::max(change, std::abs(next[v] - x[v]));
    }
    x.swap(next);
    if (change < cfg.power_iter_tol) {
      double rayleigh = 0.0;
      double sum = 0.0;
      for (NodeId v = 0; v < n; ++v) {
        double ax = 0.0;
        for (NodeId w : g.neighbors(v)) ax += x[w];
        rayleigh += x[v] * ax;
        sum += x[v];
      }
      return {rayleigh, sum / static_cast<double>(n)};
    }
  }
  throw ConvergenceError("power iteration did not converge within " +
                         std::to_string(cfg.power_iter_max) + " iterations");
}

}  // namespace

SpectralSummary spectral_summary(const Graph& g, const FeatureConfig& cfg) {
  if (cfg.power_iter_max < 1 || !(cfg.power_iter_tol > 0)) {
    throw Error("invalid feature configuration: power_iter_max >= 1 and power_iter_tol > 0 required");
  }
  if (g.num_nodes() == 0 || g.num_links() == 0) return {};
  if (g.num_nodes() < cfg.eigen_dense_threshold) return dense_spectrum(g);
  return power_spectrum(g, cfg);
}

double largest_eigenvalue(const Graph& g, const FeatureConfig& cfg) {
  return spectral_summary(g, cfg).largest_eigenvalue;
}

double avg_eigenvector(const Graph& g, const FeatureConfig& cfg) {
  return spectral_summary(g, cfg).avg_eigenvector;
}

FeatureVector extract_features(const Graph& g, const FeatureConfig& cfg) {
  FeatureVector f;
  if (g.num_nodes() == 0 || g.num_links() == 0) return f;
  const double n = static_cast<double>(g.num_nodes());
  const double l = static_cast<double>(g.num_links());
  const SpectralSummary spec = spectral_summary(g, cfg);
  f.n_nodes = n;
  f.n_links = l;
  f.avg_degree = 2.0 * l / n;
  f.pct_leaf = pct_leaf(g);
  f.avg_clustering = avg_clustering(g);
  f.largest_eigenvalue = spec.largest_eigenvalue;
  f.density = density(g);
  f.avg_betweenness = avg_betweenness(g);
  f.avg_closeness = avg_closeness(g);
  f.avg_eigenvector = spec.avg_eigenvector;
  f.avg_neighbor_degree = avg_neighbor_degree(g);
  return f;
}

}  // namespace sgn
