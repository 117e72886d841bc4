// Command-line front end: info, transform, features, benchmark.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sgn/experiment.hpp"

namespace sgn {

/// Environment variable naming the dataset root directory.
inline constexpr const char* kDataDirEnv = "SGN_DATA_DIR";

struct ExperimentConfig {
  std::string dataset;
  std::string data_dir;  // empty: $SGN_DATA_DIR, then ./data
  std::string profile = "quick";
  FeatureMethod method = FeatureMethod::kHandcrafted;
  std::vector<OrderCombination> combinations = default_combinations();
  SgnRule rule = SgnRule::kIteratedLine;
  int k_max = 2;
  int repetitions = 100;
  double train_frac = 0.9;
  double reg = 1.0;
  std::uint64_t seed = 42;
  int wl_height = 2;
  std::string out = "results";

  /// "quick" (100 repetitions) or "full" (500 repetitions).
  void apply_profile(const std::string& name);
  /// Flat "key = value" lines; '#' starts a comment. Unknown keys throw.
  void apply_text(const std::string& text);
  void apply_file(const std::filesystem::path& path);
  void set(const std::string& key, const std::string& value);
  /// Throws when a combination is empty or exceeds k_max.
  void validate() const;
};

std::filesystem::path resolve_data_root(const std::string& flag_value);

int cmd_info(const std::string& dataset, const std::filesystem::path& data_root, std::ostream& out);

struct TransformArgs {
  std::string input;    // edge-list file
  std::string dataset;  // or a TU dataset
  std::filesystem::path data_root;
  int order = 1;
  SgnRule rule = SgnRule::kIteratedLine;
  std::filesystem::path out;
};
int cmd_transform(const TransformArgs& args, std::ostream& out);

struct FeaturesArgs {
  std::string dataset;
  std::filesystem::path data_root;
  FeatureMethod method = FeatureMethod::kHandcrafted;
  OrderCombination orders{0};
  SgnRule rule = SgnRule::kIteratedLine;
  int wl_height = 2;
  std::filesystem::path out;
};
/// Writes <out>/<dataset>_<method>_order<k>.csv for each requested order.
int cmd_features(const FeaturesArgs& args, std::ostream& out);

/// Writes results.csv, results.json and importance.csv (deterministic for a
/// fixed configuration) plus timing.json (wall clock) under cfg.out.
int cmd_benchmark(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log);

/// Full CLI; returns the process exit status (0 success, 1 runtime error,
/// 2 usage error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgn
