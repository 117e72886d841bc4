#include "sgn/experiment.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace sgn {
namespace {

Graph make(std::size_t n, std::vector<Edge> e) { return Graph(n, e); }

// Clique graphs labelled 1, path graphs labelled 0.
GraphDataset separable(std::size_t copies) {
  GraphDataset ds;
  ds.name = "separable";
  for (std::size_t i = 0; i < copies; ++i) {
    ds.graphs.push_back(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    ds.labels.push_back(1);
    ds.graphs.push_back(make(4, {{0, 1}, {1, 2}, {2, 3}}));
    ds.labels.push_back(0);
  }
  return ds;
}

GraphDataset noisy(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  GraphDataset ds;
  ds.name = "noisy";
  for (std::size_t i = 0; i < n; ++i) {
    const bool dense = i % 2 == 0;
    ds.graphs.push_back(oracle::random_graph(rng, 10, dense ? 0.4 : 0.1, dense ? 0.8 : 0.5));
    ds.labels.push_back(dense ? 1 : 0);
  }
  return ds;
}

TEST(OrdersTest, Parse) {
  EXPECT_EQ(parse_order_combination("2,0,1,0"), (OrderCombination{0, 1, 2}));
  EXPECT_EQ(parse_order_combination("(0, 2)"), (OrderCombination{0, 2}));
  EXPECT_THROW(parse_order_combination("a"), Error);
  EXPECT_THROW(parse_order_combination("-1"), Error);
  EXPECT_THROW(parse_order_combination(""), Error);
  auto combos = parse_order_combinations("0;1,2 0,1,2");
  ASSERT_EQ(combos.size(), 3u);
  EXPECT_EQ(combos[1], (OrderCombination{1, 2}));
  EXPECT_EQ(format_orders({0, 1, 2}), "0,1,2");
  EXPECT_EQ(default_combinations().size(), 7u);
  EXPECT_EQ(parse_feature_method("wl"), FeatureMethod::kWl);
  EXPECT_THROW(parse_feature_method("graph2vec"), Error);
}

TEST(SeedTest, DistinctStreams) {
  EXPECT_EQ(derive_seed(42, 3, 0), derive_seed(42, 3, 0));
  EXPECT_NE(derive_seed(42, 3, 0), derive_seed(42, 4, 0));
  EXPECT_NE(derive_seed(42, 3, 0), derive_seed(42, 3, 1));
  EXPECT_NE(derive_seed(42, 3, 0), derive_seed(43, 3, 0));
}

TEST(ExperimentTest, SeparableDatasetIsPerfect) {
  GraphDataset ds = separable(50);
  ExperimentOptions opts;
  opts.repetitions = 20;
  opts.train_frac = 0.5;
  const std::vector<OrderCombination> combos{{0}, {0, 1, 2}};
  ExperimentResult r = run_experiment(ds, {}, combos, opts);
  ASSERT_EQ(r.combinations.size(), 2u);
  for (const auto& c : r.combinations) {
    EXPECT_EQ(c.mean_f1, 1.0);
    EXPECT_EQ(c.std_f1, 0.0);
    EXPECT_EQ(c.f1_per_rep.size(), 20u);
    EXPECT_EQ(c.gain_pct, 0.0);
  }
  EXPECT_EQ(r.combinations[1].feature_names.size(), 33u);
  EXPECT_EQ(r.combinations[1].pca_dim, 11);
  const auto& imp = r.combinations[1].importance_pct;
  EXPECT_NEAR(std::accumulate(imp.begin(), imp.end(), 0.0), 100.0, 1e-9);
}

TEST(ExperimentTest, BitReproducibleAndScheduleIndependent) {
  GraphDataset ds = noisy(77, 60);
  ExperimentOptions opts;
  opts.repetitions = 25;
  const auto combos = default_combinations();
  ExperimentResult a = run_experiment(ds, {}, combos, opts);
  ExperimentResult b = run_experiment(ds, {}, combos, opts);
  opts.exec = Execution::kSerial;
  ExperimentResult c = run_experiment(ds, {}, combos, opts);
  for (std::size_t i = 0; i < combos.size(); ++i) {
    EXPECT_EQ(a.combinations[i].f1_per_rep, b.combinations[i].f1_per_rep);
    EXPECT_EQ(a.combinations[i].f1_per_rep, c.combinations[i].f1_per_rep);
    EXPECT_EQ(a.combinations[i].importance_pct, c.combinations[i].importance_pct);
    EXPECT_GE(a.combinations[i].std_f1, 0.0);
  }
  opts.seed = 43;
  ExperimentResult d = run_experiment(ds, {}, combos, opts);
  EXPECT_NE(a.combinations[0].f1_per_rep, d.combinations[0].f1_per_rep);
}

TEST(ExperimentTest, GainFollowsStoredMeans) {
  GraphDataset ds = noisy(78, 60);
  ExperimentOptions opts;
  opts.repetitions = 10;
  ExperimentResult r = run_experiment(ds, {}, default_combinations(), opts);
  const double base = r.combinations[0].mean_f1;
  for (const auto& c : r.combinations) {
    EXPECT_DOUBLE_EQ(c.gain_pct, (c.mean_f1 - base) / base * 100.0);
  }
}

TEST(ExperimentTest, SingleRepetitionHasZeroStd) {
  GraphDataset ds = noisy(79, 30);
  ExperimentOptions opts;
  opts.repetitions = 1;
  const std::vector<OrderCombination> combos{{0}};
  EXPECT_EQ(run_experiment(ds, {}, combos, opts).combinations[0].std_f1, 0.0);
}

TEST(ExperimentTest, ImbalancedDatasetResamples) {
  // Three positives among forty graphs: small training sets often miss them.
  GraphDataset ds = noisy(80, 40);
  for (std::size_t i = 0; i < ds.labels.size(); ++i) ds.labels[i] = i < 3 ? 1 : 0;
  ExperimentOptions opts;
  opts.repetitions = 50;
  opts.train_frac = 0.1;
  const std::vector<OrderCombination> combos{{0}};
  ExperimentResult r = run_experiment(ds, {}, combos, opts);
  EXPECT_GT(r.combinations[0].resampled_splits, 0);
}

TEST(ExperimentTest, InvalidOptions) {
  GraphDataset ds = noisy(81, 20);
  const std::vector<OrderCombination> combos{{0}};
  ExperimentOptions opts;
  opts.repetitions = 0;
  EXPECT_THROW(run_experiment(ds, {}, combos, opts), Error);
  opts.repetitions = 2;
  opts.train_frac = 1.0;
  EXPECT_THROW(run_experiment(ds, {}, combos, opts), Error);
  opts.train_frac = 0.9;
  const auto blocks = compute_order_blocks(ds, 1, {}).blocks;
  EXPECT_THROW(run_combination(blocks, ds.labels, {2}, opts), Error);
}

TEST(ExperimentTest, WlBlocks) {
  GraphDataset ds = noisy(82, 30);
  FeatureOptions fopts;
  fopts.method = FeatureMethod::kWl;
  const auto blocks = compute_order_blocks(ds, 2, fopts).blocks;
  ASSERT_EQ(blocks.size(), 3u);
  for (const auto& b : blocks) EXPECT_EQ(b.rows(), 30);
  ExperimentOptions opts;
  opts.repetitions = 5;
  auto r = run_combination(blocks, ds.labels, {0, 1, 2}, opts);
  EXPECT_LE(r.pca_dim, blocks[0].cols());
}

TEST(ExperimentTest, LiteralRuleBlocks) {
  GraphDataset ds = noisy(83, 10);
  FeatureOptions fopts;
  fopts.rule = SgnRule::kAlgorithm2Literal;
  const auto blocks = compute_order_blocks(ds, 2, fopts, Execution::kSerial).blocks;
  for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
    const auto f = extract_features(sgn2_literal(ds.graphs[i]).graph).values();
    for (std::size_t j = 0; j < f.size(); ++j) EXPECT_EQ(blocks[2].values(i, j), f[j]);
  }
  EXPECT_THROW(compute_order_blocks(ds, 3, fopts), Error);
}

}  // namespace
}  // namespace sgn
