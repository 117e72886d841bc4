// Test-only reference implementations. Deliberately naive and independent
// of the library code paths they check.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "sgn/graph.hpp"

namespace sgn::oracle {

inline Graph random_graph(std::mt19937_64& rng, std::size_t max_nodes, double p_lo = 0.1,
                          double p_hi = 0.7) {
  std::uniform_int_distribution<std::size_t> nd(1, max_nodes);
  std::uniform_real_distribution<double> pd(p_lo, p_hi);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t n = nd(rng);
  const double p = pd(rng);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (u(rng) < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

inline std::vector<NodeId> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<NodeId> perm(n);
  for (NodeId i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Floyd-Warshall on the dense adjacency; unreachable = -1.
inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.num_nodes();
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && g.has_link(static_cast<NodeId>(i), static_cast<NodeId>(j))) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& v : row)
      if (v >= kInf) v = -1;
  return d;
}

/// Enumerates every shortest path explicitly for each unordered pair and
/// counts how many pass through each interior node.
inline double brute_avg_betweenness(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) return 0.0;
  const auto d = all_pairs_distances(g);
  std::vector<double> score(n, 0.0);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = s + 1; t < n; ++t) {
      if (d[s][t] < 0) continue;
      std::vector<std::vector<NodeId>> paths;
      std::vector<NodeId> path{s};
      std::function<void(NodeId)> walk = [&](NodeId u) {
        if (u == t) {
          paths.push_back(path);
          return;
        }
        for (NodeId w = 0; w < n; ++w) {
          if (g.has_link(u, w) && d[s][w] == d[s][u] + 1 && d[w][t] == d[u][t] - 1) {
            path.push_back(w);
            walk(w);
            path.pop_back();
          }
        }
      };
      walk(s);
      const double total = static_cast<double>(paths.size());
      for (const auto& p : paths) {
        for (std::size_t k = 1; k + 1 < p.size(); ++k) score[p[k]] += 1.0 / total;
      }
    }
  }
  double sum = 0.0;
  for (double v : score) sum += v;
  return sum / static_cast<double>(n);
}

inline double brute_avg_closeness(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n < 2) return 0.0;
  const auto d = all_pairs_distances(g);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double reach = 0.0, sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && d[i][j] > 0) {
        reach += 1.0;
        sum += d[i][j];
      }
    }
    if (reach > 0) total += reach / sum * reach / static_cast<double>(n - 1);
  }
  return total / static_cast<double>(n);
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix stored row-major.
/// Returns eigenvalues and eigenvectors (columns of vecs).
inline void jacobi_eigen(std::vector<std::vector<double>> a, std::vector<double>& vals,
                         std::vector<std::vector<double>>& vecs) {
  const std::size_t n = a.size();
  vecs.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) vecs[i][i] = 1.0;
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = vecs[k][p], vkq = vecs[k][q];
          vecs[k][p] = c * vkp - s * vkq;
          vecs[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  vals.resize(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = a[i][i];
}

struct JacobiSpectrum {
  double top = 0.0;
  double mean_eigvec = 0.0;
};

/// Largest eigenvalue and mean entry of the unit projection of the ones
/// vector onto the top eigenspace.
inline JacobiSpectrum jacobi_spectrum(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0 || g.num_links() == 0) return {};
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const auto& [u, v] : g.links()) a[u][v] = a[v][u] = 1.0;
  std::vector<double> vals;
  std::vector<std::vector<double>> vecs;
  jacobi_eigen(a, vals, vecs);
  const double top = *std::max_element(vals.begin(), vals.end());
  std::vector<double> x(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    if (vals[c] < top - 1e-9 * std::max(1.0, top)) continue;
    double dot = 0.0;
    for (std::size_t k = 0; k < n; ++k) dot += vecs[k][c];
    for (std::size_t k = 0; k < n; ++k) x[k] += dot * vecs[k][c];
  }
  double norm = 0.0, sum = 0.0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  for (double v : x) sum += v / norm;
  return {top, sum / static_cast<double>(n)};
}

/// Naive line graph over explicit link sets: every pair of links is tested
/// for a shared endpoint. Nodes are keyed by the set of original links they
/// stand for, so two constructions compare independently of node order.
using LinkKey = std::set<Edge>;
struct NaiveLineGraph {
  std::vector<LinkKey> nodes;
  std::set<std::pair<LinkKey, LinkKey>> links;
};

inline NaiveLineGraph naive_line_graph_twice(const Graph& g) {
  std::vector<Edge> e1;
  for (NodeId u = 0; u < g.num_nodes(); ++u)
    for (NodeId v = u + 1; v < g.num_nodes(); ++v)
      if (g.has_link(u, v)) e1.emplace_back(u, v);

  // First line graph: node i = link e1[i].
  std::vector<std::pair<std::size_t, std::size_t>> e2;
  for (std::size_t i = 0; i < e1.size(); ++i) {
    for (std::size_t j = i + 1; j < e1.size(); ++j) {
      const auto [a, b] = e1[i];
      const auto [c, d] = e1[j];
      if (a == c || a == d || b == c || b == d) e2.emplace_back(i, j);
    }
  }
  // Second line graph: node = link of the first, keyed by its two links.
  NaiveLineGraph out;
  for (const auto& [i, j] : e2) out.nodes.push_back(LinkKey{e1[i], e1[j]});
  for (std::size_t x = 0; x < e2.size(); ++x) {
    for (std::size_t y = x + 1; y < e2.size(); ++y) {
      const auto [a, b] = e2[x];
      const auto [c, d] = e2[y];
      if (a == c || a == d || b == c || b == d) {
        auto kx = out.nodes[x], ky = out.nodes[y];
        if (ky < kx) std::swap(kx, ky);
        out.links.emplace(kx, ky);
      }
    }
  }
  return out;
}

}  // namespace sgn::oracle
