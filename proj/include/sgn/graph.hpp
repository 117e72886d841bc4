// Undirected simple graph with dense integer node ids.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace sgn {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Graph {
 public:
  Graph() = default;

  /// Builds a validated graph. Duplicate pairs collapse into one link;
  /// self-loops and out-of-range ids throw sgn::Error.
  Graph(std::size_t num_nodes, std::span<const Edge> edges);

  std::size_t num_nodes() const { return adjacency_.size(); }
  std::size_t num_links() const { return num_links_; }

  std::span<const NodeId> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  bool has_link(NodeId u, NodeId v) const;

  /// Every link once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> links() const;

  const std::optional<std::vector<int>>& node_labels() const { return node_labels_; }
  void set_node_labels(std::vector<int> labels);

  std::optional<int> class_label() const { return class_label_; }
  void set_class_label(std::optional<int> label) { class_label_ = label; }

  std::optional<int> graph_id() const { return graph_id_; }
  void set_graph_id(std::optional<int> id) { graph_id_ = id; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.node_labels_ == b.node_labels_;
  }

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t num_links_ = 0;
  std::optional<std::vector<int>> node_labels_;
  std::optional<int> class_label_;
  std::optional<int> graph_id_;
};

inline Graph new_graph(std::size_t num_nodes, std::span<const Edge> edges) {
  return Graph(num_nodes, edges);
}

/// Degree of v; throws on an out-of-range id.
std::size_t degree(const Graph& g, NodeId v);

std::vector<std::size_t> degree_sequence(const Graph& g);

/// Maximal connected node sets. Each set is sorted; sets are ordered by
/// their smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

/// Relabels node v as perm[v]. Node labels follow their nodes.
Graph permute_nodes(const Graph& g, std::span<const NodeId> perm);

Eigen::MatrixXd adjacency_matrix(const Graph& g);

}  // namespace sgn
