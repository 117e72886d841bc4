#include "sgn/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace sgn {
namespace {

Graph triangle() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  return Graph(3, e);
}

Graph star4() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}};
  return Graph(4, e);
}

Graph path3() {
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  return Graph(3, e);
}

TEST(GraphTest, TriangleHasThreeLinks) {
  Graph g = triangle();
  EXPECT_EQ(g.num_nodes(), 3u);
  EXPECT_EQ(g.num_links(), 3u);
  EXPECT_TRUE(g.has_link(2, 0));
}

TEST(GraphTest, DuplicateLinksCollapse) {
  const std::vector<Edge> e{{0, 1}, {0, 1}, {1, 2}, {1, 0}};
  Graph g(3, e);
  EXPECT_EQ(g.num_links(), 2u);
  EXPECT_EQ(g, path3());
}

TEST(GraphTest, SelfLoopRejected) {
  const std::vector<Edge> e{{0, 0}};
  EXPECT_THROW(Graph(2, e), Error);
}

TEST(GraphTest, OutOfRangeRejected) {
  const std::vector<Edge> e{{0, 3}};
  EXPECT_THROW(Graph(3, e), Error);
  EXPECT_THROW(degree(triangle(), 7), Error);
}

TEST(GraphTest, Degree) {
  EXPECT_EQ(degree(triangle(), 0), 2u);
  EXPECT_EQ(degree(star4(), 0), 3u);
  EXPECT_EQ(degree(star4(), 1), 1u);
}

TEST(GraphTest, ConnectedComponents) {
  EXPECT_EQ(connected_components(triangle()).size(), 1u);
  EXPECT_EQ(connected_components(Graph(3, {})).size(), 3u);

  const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  auto comps = connected_components(Graph(4, e));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(comps[1], (std::vector<NodeId>{3}));
}

TEST(GraphTest, PermuteNodes) {
  const std::vector<NodeId> rot{1, 2, 0};
  EXPECT_EQ(permute_nodes(triangle(), rot), triangle());

  const std::vector<NodeId> swap_ends{2, 1, 0};
  EXPECT_EQ(permute_nodes(path3(), swap_ends).links(), path3().links());

  const std::vector<NodeId> id{0, 1, 2, 3};
  EXPECT_EQ(permute_nodes(star4(), id), star4());

  const std::vector<NodeId> bad{0, 0, 1};
  EXPECT_THROW(permute_nodes(triangle(), bad), Error);
}

TEST(GraphTest, PermutationCarriesNodeLabels) {
  Graph g = path3();
  g.set_node_labels({7, 8, 9});
  const std::vector<NodeId> perm{2, 0, 1};
  Graph h = permute_nodes(g, perm);
  EXPECT_EQ(*h.node_labels(), (std::vector<int>{8, 9, 7}));
}

TEST(GraphTest, AdjacencyMatrix) {
  Eigen::MatrixXd a = adjacency_matrix(triangle());
  EXPECT_EQ(a, Eigen::MatrixXd::Ones(3, 3) - Eigen::MatrixXd::Identity(3, 3));
  EXPECT_TRUE(adjacency_matrix(Graph(3, {})).isZero());
  Eigen::MatrixXd p = adjacency_matrix(path3());
  EXPECT_EQ(p.sum(), 4.0);
  EXPECT_EQ(p(0, 1), 1.0);
  EXPECT_EQ(p(2, 1), 1.0);
  EXPECT_EQ(p(0, 2), 0.0);
}

TEST(GraphProperty, RandomGraphInvariants) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(rng, 15);
    auto deg = degree_sequence(g);
    EXPECT_EQ(std::accumulate(deg.begin(), deg.end(), std::size_t{0}), 2 * g.num_links());

    Eigen::MatrixXd a = adjacency_matrix(g);
    EXPECT_EQ(a, a.transpose());
    EXPECT_TRUE(a.diagonal().isZero());

    auto perm = oracle::random_permutation(rng, g.num_nodes());
    Graph h = permute_nodes(g, perm);
    auto deg_h = degree_sequence(h);
    std::sort(deg.begin(), deg.end());
    std::sort(deg_h.begin(), deg_h.end());
    EXPECT_EQ(h.num_nodes(), g.num_nodes());
    EXPECT_EQ(h.num_links(), g.num_links());
    EXPECT_EQ(deg, deg_h);

    std::vector<int> seen(g.num_nodes(), 0);
    for (const auto& comp : connected_components(g)) {
      for (NodeId v : comp) ++seen[v];
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

}  // namespace
}  // namespace sgn
