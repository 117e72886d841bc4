// Subgraph-network construction.
//
// An SGN of order k replaces every order-(k-1) link by a node. Order 1 is
// the line graph; order 2 nodes are open triangles (wedges). Each SGN node
// keeps the sorted set of original node ids it covers (provenance) and a
// canonical identity string that stays unique when provenances coincide,
// e.g. the three wedges of a closed triangle.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sgn/graph.hpp"

namespace sgn {

struct SgnGraph {
  Graph graph;
  int order = 0;
  std::vector<std::vector<NodeId>> provenance;
  std::vector<std::string> identity;
};

enum class SgnRule {
  kIteratedLine,      // order k = line graph applied k times
  kAlgorithm2Literal  // order 2 only: wedges sharing a center form a clique
};

struct SgnConfig {
  int order = 1;
  SgnRule rule = SgnRule::kIteratedLine;
};

SgnRule parse_sgn_rule(std::string_view text);
std::string_view to_string(SgnRule rule);

/// Wraps g as an order-0 SGN: provenance[i] = {i}, identity[i] = "i".
SgnGraph as_sgn(const Graph& g);

/// One node per link of g, ordered as g.links(); nodes are adjacent iff
/// their links share an endpoint.
SgnGraph line_graph(const Graph& g);

/// Line graph of an SGN; provenance of a new node is the union of the two
/// merged provenances and identity is the sorted pair of parent identities.
SgnGraph line_graph(const SgnGraph& s);

/// Dispatches on cfg.rule. Throws sgn::Error for algorithm2-literal with
/// order != 2 or for a negative order.
SgnGraph build_sgn(const Graph& g, const SgnConfig& cfg);

/// One node per wedge (center v, endpoints w1 < w2), ordered by center then
/// endpoint pair; all wedges of the same center are pairwise adjacent and
/// wedges with different centers never are.
SgnGraph sgn2_literal(const Graph& g);

}  // namespace sgn
