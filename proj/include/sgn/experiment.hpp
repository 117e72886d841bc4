// Repeated random-split classification over SGN-order feature combinations.
//
// For each repetition the dataset is shuffled with a seed derived from
// (master seed, repetition), the first round(train_frac * n) graphs train
// and the rest test. Standardisation and PCA are fit on training rows only;
// the PCA target dimension is the column count of the order-0 block.

#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgn/dataset_io.hpp"
#include "sgn/feature_matrix.hpp"
#include "sgn/logreg.hpp"

namespace sgn {

enum class FeatureMethod { kHandcrafted, kWl };

FeatureMethod parse_feature_method(std::string_view text);
std::string_view to_string(FeatureMethod m);

using OrderCombination = std::vector<int>;

/// "0,1,2" -> {0,1,2}; combinations separated by ';' or ' '.
OrderCombination parse_order_combination(std::string_view text);
std::vector<OrderCombination> parse_order_combinations(std::string_view text);
std::string format_orders(const OrderCombination& orders);

/// (0),(1),(2),(0,1),(0,2),(1,2),(0,1,2).
std::vector<OrderCombination> default_combinations();

struct ExperimentOptions {
  int repetitions = 100;
  double train_frac = 0.9;
  double reg = 1.0;
  std::uint64_t seed = 42;
  Execution exec = Execution::kParallel;
};

struct CombinationResult {
  OrderCombination orders;
  double mean_f1 = 0.0;  // fraction in [0, 1]
  double std_f1 = 0.0;   // sample standard deviation over repetitions
  double gain_pct = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> f1_per_rep;
  /// |beta| shares of the model mapped back to the standardised
  /// input columns, averaged over repetitions.
  std::vector<std::string> feature_names;
  std::vector<double> importance_pct;
  int resampled_splits = 0;
  int pca_dim = 0;
};

struct ExperimentResult {
  std::vector<CombinationResult> combinations;
};

/// Per-order feature blocks (index = SGN order) for one dataset.
struct OrderBlocks {
  std::vector<FeatureMatrix> blocks;
  std::vector<double> transform_seconds;  // per order
  std::vector<double> feature_seconds;    // per order
};

struct FeatureOptions {
  FeatureMethod method = FeatureMethod::kHandcrafted;
  SgnRule rule = SgnRule::kIteratedLine;
  FeatureConfig handcrafted;
  WlConfig wl;
};

/// Builds SGNs of orders 0..max_order and extracts the feature blocks.
/// WL uses the dataset's node labels at order 0 when present and degree
/// initialisation everywhere else.
OrderBlocks compute_order_blocks(const GraphDataset& ds, int max_order, const FeatureOptions& fopts,
                                 Execution exec = Execution::kParallel);

/// Mixes (seed, repetition, attempt) into a generator seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t repetition, std::uint64_t attempt);

/// Runs one order combination. blocks[k] is the order-k feature block;
/// blocks[0] fixes the PCA target dimension.
CombinationResult run_combination(std::span<const FeatureMatrix> blocks, std::span<const int> labels,
                                  const OrderCombination& orders, const ExperimentOptions& opts);

/// Runs every combination and fills gains against the (0) combination when
/// it is among them.
ExperimentResult run_experiment(std::span<const FeatureMatrix> blocks, std::span<const int> labels,
                                std::span<const OrderCombination> combinations,
                                const ExperimentOptions& opts);

/// Convenience wrapper: features for the needed orders, then run_experiment.
ExperimentResult run_experiment(const GraphDataset& ds, const FeatureOptions& fopts,
                                std::span<const OrderCombination> combinations,
                                const ExperimentOptions& opts);

}  // namespace sgn
