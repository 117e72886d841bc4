// Weisfeiler-Lehman subtree pattern counts.

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string_view>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "sgn/graph.hpp"

namespace sgn {

enum class WlInit { kNodeLabels, kDegree };

WlInit parse_wl_init(std::string_view text);

struct WlConfig {
  int height = 2;
  WlInit init = WlInit::kNodeLabels;
};

/// Shared compressed-label dictionary. A signature is (iteration, base
/// label, sorted neighbour labels); ids are handed out densely in
/// first-encounter order.
class WlVocabulary {
 public:
  using Signature = std::tuple<int, int, std::vector<int>>;

  int intern(Signature sig);
  std::size_t size() const { return by_signature_.size(); }
  /// Iteration index of every pattern id.
  std::span<const int> iteration_of() const { return iteration_of_; }

 private:
  std::map<Signature, int> by_signature_;
  std::vector<int> iteration_of_;
};

/// Pattern ids of every node for iterations 0..height, outer index is the
/// iteration. Extends vocab with unseen signatures.
std::vector<std::vector<int>> wl_relabel(const Graph& g, const WlConfig& cfg, WlVocabulary& vocab);

/// graphs x patterns count matrix over a shared vocabulary. Vocabulary is
/// built sequentially in graph order; counting runs per graph.
Eigen::MatrixXd wl_feature_matrix(std::span<const Graph> graphs, const WlConfig& cfg,
                                  WlVocabulary* vocab_out = nullptr);

}  // namespace sgn
