// Dataset-level feature extraction kernels.
//
// Each kernel has a serial and an OpenMP path selected by Execution; both
// produce identical matrices because every graph is handled independently
// and written to its own row.

#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sgn/features.hpp"
#include "sgn/graph.hpp"
#include "sgn/transform.hpp"
#include "sgn/wl.hpp"

namespace sgn {

enum class Execution { kSerial, kParallel };

struct FeatureMatrix {
  Eigen::MatrixXd values;              // graphs x features
  std::vector<std::string> names;      // one per column
  std::vector<int> source_order;       // SGN order of each column

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
};

/// Column-wise concatenation; names and orders follow the blocks.
FeatureMatrix concat_orders(std::span<const FeatureMatrix> blocks);

/// SGN graphs of every input graph, in input order.
std::vector<Graph> build_sgn_graphs(std::span<const Graph> graphs, const SgnConfig& cfg,
                                    Execution exec = Execution::kParallel);

/// Eleven handcrafted features per graph; columns named "o<order>_<feature>".
FeatureMatrix handcrafted_matrix(std::span<const Graph> graphs, int order,
                                 const FeatureConfig& cfg = {},
                                 Execution exec = Execution::kParallel);

/// WL pattern counts per graph; columns named "o<order>_wl<pattern id>".
FeatureMatrix wl_matrix(std::span<const Graph> graphs, int order, const WlConfig& cfg);

}  // namespace sgn
