#include "sgn/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace sgn {

Graph::Graph(std::size_t num_nodes, std::span<const Edge> edges)
    : adjacency_(num_nodes) {
  for (const auto& [u, v] : edges) {
    if (u >= num_nodes || v >= num_nodes) {
      throw Error("link (" + std::to_string(u) + ", " + std::to_string(v) +
                  ") references a node outside [0, " + std::to_string(num_nodes) + ")");
    }
    if (u == v) {
      throw Error("self-loop on node " + std::to_string(u));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  std::size_t endpoints = 0;
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    nbrs.shrink_to_fit();
    endpoints += nbrs.size();
  }
  num_links_ = endpoints / 2;
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  if (v >= adjacency_.size()) {
    throw Error("node id " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

bool Graph::has_link(NodeId u, NodeId v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::links() const {
  std::vector<Edge> out;
  out.reserve(num_links_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_node_labels(std::vector<int> labels) {
  if (labels.size() != adjacency_.size()) {
    throw Error("node label count " + std::to_string(labels.size()) +
                " does not match node count " + std::to_string(adjacency_.size()));
  }
  node_labels_ = std::move(labels);
}

std::size_t degree(const Graph& g, NodeId v) { return g.degree(v); }

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> out(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) out[v] = g.degree(v);
  return out;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<NodeId>> out;
  std::queue<NodeId> frontier;
  for (NodeId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<NodeId> comp;
    seen[root] = true;
    frontier.push(root);
    while (!frontier.empty()) {
      NodeId u = frontier.front();
      frontier.pop();
      comp.push_back(u);
      for (NodeId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph permute_nodes(const Graph& g, std::span<const NodeId> perm) {
  const std::size_t n = g.num_nodes();
  if (perm.size() != n) {
    throw Error("permutation length " + std::to_string(perm.size()) +
                " does not match node count " + std::to_string(n));
  }
  std::vector<bool> hit(n, false);
  for (NodeId p : perm) {
    if (p >= n || hit[p]) throw Error("node mapping is not a bijection");
    hit[p] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_links());
  for (const auto& [u, v] : g.links()) edges.emplace_back(perm[u], perm[v]);
  Graph out(n, edges);
  if (g.node_labels()) {
    std::vector<int> labels(n);
    for (NodeId v = 0; v < n; ++v) labels[perm[v]] = (*g.node_labels())[v];
    out.set_node_labels(std::move(labels));
  }
  out.set_class_label(g.class_label());
  out.set_graph_id(g.graph_id());
  return out;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.links()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

}  // namespace sgn
