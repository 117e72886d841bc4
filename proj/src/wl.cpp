#include "sgn/wl.hpp"

#include <algorithm>
#include <string>

namespace sgn {

WlInit parse_wl_init(std::string_view text) {
  if (text == "node-labels") return WlInit::kNodeLabels;
  if (text == "degree") return WlInit::kDegree;
  throw Error("unknown WL initialisation '" + std::string(text) + "'");
}

int WlVocabulary::intern(Signature sig) {
  const int next = static_cast<int>(by_signature_.size());
  const int iteration = std::get<0>(sig);
  auto [it, inserted] = by_signature_.try_emplace(std::move(sig), next);
  if (inserted) iteration_of_.push_back(iteration);
  return it->second;
}

std::vector<std::vector<int>> wl_relabel(const Graph& g, const WlConfig& cfg, WlVocabulary& vocab) {
  if (cfg.height < 0) throw Error("WL height must be non-negative");
  const std::size_t n = g.num_nodes();
  if (cfg.init == WlInit::kNodeLabels && !g.node_labels()) {
    throw Error("WL node-label initialisation requested but the graph carries no node labels");
  }

  std::vector<std::vector<int>> labels;
  labels.reserve(static_cast<std::size_t>(cfg.height) + 1);

  std::vector<int> current(n);
  for (NodeId v = 0; v < n; ++v) {
    const int base = cfg.init == WlInit::kNodeLabels ? (*g.node_labels())[v]
                                                     : static_cast<int>(g.degree(v));
    current[v] = vocab.intern({0, base, {}});
  }
  labels.push_back(current);

  std::vector<int> nbr_labels;
  for (int it = 1; it <= cfg.height; ++it) {
    const std::vector<int>& prev = labels.back();
    for (NodeId v = 0; v < n; ++v) {
      nbr_labels.clear();
      for (NodeId w : g.neighbors(v)) nbr_labels.push_back(prev[w]);
      std::sort(nbr_labels.begin(), nbr_labels.end());
      current[v] = vocab.intern({it, prev[v], nbr_labels});
    }
    labels.push_back(current);
  }
  return labels;
}

Eigen::MatrixXd wl_feature_matrix(std::span<const Graph> graphs, const WlConfig& cfg,
                                  WlVocabulary* vocab_out) {
  WlVocabulary vocab;
  std::vector<std::vector<std::vector<int>>> per_graph;
  per_graph.reserve(graphs.size());
  for (const Graph& g : graphs) per_graph.push_back(wl_relabel(g, cfg, vocab));

  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(graphs.size()),
                                                 static_cast<Eigen::Index>(vocab.size()));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(per_graph.size()); ++r) {
    for (const auto& iteration : per_graph[static_cast<std::size_t>(r)]) {
      for (int id : iteration) counts(r, id) += 1.0;
    }
  }
  if (vocab_out) *vocab_out = std::move(vocab);
  return counts;
}

}  // namespace sgn
