#include "sgn/transform.hpp"

#include <algorithm>
#include <iterator>

namespace sgn {

SgnRule parse_sgn_rule(std::string_view text) {
  if (text == "iterated-line") return SgnRule::kIteratedLine;
  if (text == "algorithm2-literal") return SgnRule::kAlgorithm2Literal;
  throw Error("unknown SGN rule '" + std::string(text) +
              "' (expected iterated-line or algorithm2-literal)");
}

std::string_view to_string(SgnRule rule) {
  return rule == SgnRule::kIteratedLine ? "iterated-line" : "algorithm2-literal";
}

SgnGraph as_sgn(const Graph& g) {
  SgnGraph s;
  s.graph = g;
  s.order = 0;
  s.provenance.resize(g.num_nodes());
  s.identity.resize(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    s.provenance[v] = {v};
    s.identity[v] = std::to_string(v);
  }
  return s;
}

namespace {

std::vector<NodeId> merge_sets(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::vector<NodeId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string pair_identity(const SgnGraph& s, NodeId u, NodeId v) {
  if (s.order == 0) {
    // u < v already; matches the "u_v" labels of first-order nodes.
    return s.identity[u] + "_" + s.identity[v];
  }
  const std::string& a = s.identity[u];
  const std::string& b = s.identity[v];
  return a < b ? "(" + a + "|" + b + ")" : "(" + b + "|" + a + ")";
}

}  // namespace

SgnGraph line_graph(const SgnGraph& s) {
  const Graph& g = s.graph;
  const std::vector<Edge> links = g.links();

  std::vector<std::vector<NodeId>> incident(g.num_nodes());
  for (NodeId e = 0; e < links.size(); ++e) {
    incident[links[e].first].push_back(e);
    incident[links[e].second].push_back(e);
  }

  std::vector<Edge> out_edges;
  for (const auto& inc : incident) {
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        out_edges.emplace_back(inc[i], inc[j]);
      }
    }
  }

  SgnGraph out;
  out.graph = Graph(links.size(), out_edges);
  out.order = s.order + 1;
  out.provenance.reserve(links.size());
  out.identity.reserve(links.size());
  for (const auto& [u, v] : links) {
    out.provenance.push_back(merge_sets(s.provenance[u], s.provenance[v]));
    out.identity.push_back(pair_identity(s, u, v));
  }
  return out;
}

SgnGraph line_graph(const Graph& g) { return line_graph(as_sgn(g)); }

SgnGraph sgn2_literal(const Graph& g) {
  SgnGraph out;
  out.order = 2;
  std::vector<Edge> edges;
  NodeId next = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    auto nbrs = g.neighbors(v);
    const NodeId first = next;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        std::vector<NodeId> prov{v, nbrs[i], nbrs[j]};
        std::sort(prov.begin(), prov.end());
        out.provenance.push_back(std::move(prov));
        out.identity.push_back(std::to_string(v) + ":" + std::to_string(nbrs[i]) + "_" +
                               std::to_string(nbrs[j]));
        ++next;
      }
    }
    for (NodeId a = first; a < next; ++a) {
      for (NodeId b = a + 1; b < next; ++b) edges.emplace_back(a, b);
    }
  }
  out.graph = Graph(next, edges);
  return out;
}

SgnGraph build_sgn(const Graph& g, const SgnConfig& cfg) {
  if (cfg.order < 0) throw Error("SGN order must be non-negative");
  if (cfg.rule == SgnRule::kAlgorithm2Literal) {
    if (cfg.order != 2) throw Error("algorithm2-literal rule is defined for order 2 only");
    return sgn2_literal(g);
  }
  SgnGraph s = as_sgn(g);
  for (int k = 0; k < cfg.order; ++k) s = line_graph(s);
  return s;
}

}  // namespace sgn
