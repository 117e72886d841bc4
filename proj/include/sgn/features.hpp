// Handcrafted structural features of a single graph.

#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "sgn/graph.hpp"

namespace sgn {

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kNumHandcrafted = 11;

/// Column names in FeatureVector order.
inline constexpr std::array<std::string_view, kNumHandcrafted> kHandcraftedNames = {
    "N", "L", "K", "P", "C", "lambda", "D", "CB", "CC", "CE", "DN"};

struct FeatureVector {
  double n_nodes = 0;
  double n_links = 0;
  double avg_degree = 0;
  double pct_leaf = 0;
  double avg_clustering = 0;
  double largest_eigenvalue = 0;
  double density = 0;
  double avg_betweenness = 0;
  double avg_closeness = 0;
  double avg_eigenvector = 0;
  double avg_neighbor_degree = 0;

  std::array<double, kNumHandcrafted> values() const {
    return {n_nodes,    n_links,         avg_degree,      pct_leaf,
            avg_clustering, largest_eigenvalue, density, avg_betweenness,
            avg_closeness,  avg_eigenvector,    avg_neighbor_degree};
  }
};

struct FeatureConfig {
  /// Graphs with fewer nodes use a dense symmetric eigensolver; larger ones
  /// use shifted power iteration.
  std::size_t eigen_dense_threshold = 256;
  int power_iter_max = 100000;
  double power_iter_tol = 1e-12;
};

double pct_leaf(const Graph& g);
double avg_clustering(const Graph& g);
double density(const Graph& g);

/// Mean over nodes of the number of shortest paths through the node, summed
/// over unordered source/target pairs (Brandes accumulation, halved).
double avg_betweenness(const Graph& g);

/// Within-component closeness (r-1)/sum(d), scaled by (r-1)/(N-1).
double avg_closeness(const Graph& g);

double avg_neighbor_degree(const Graph& g);

/// Largest adjacency eigenvalue together with the mean entry of the
/// unit-norm dominant eigenvector. When the top eigenvalue is repeated
/// (several components sharing the same spectral radius) the eigenvector is
/// the normalized projection of the all-ones vector onto that eigenspace,
/// which is the limit of power iteration from a uniform start.
struct SpectralSummary {
  double largest_eigenvalue = 0;
  double avg_eigenvector = 0;
};
SpectralSummary spectral_summary(const Graph& g, const FeatureConfig& cfg = {});

double largest_eigenvalue(const Graph& g, const FeatureConfig& cfg = {});
double avg_eigenvector(const Graph& g, const FeatureConfig& cfg = {});

/// All eleven features. Graphs without nodes or without links map to the
/// zero vector so feature matrices stay rectangular across SGN orders.
FeatureVector extract_features(const Graph& g, const FeatureConfig& cfg = {});

}  // namespace sgn
