#include "sgn/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "sgn/metrics.hpp"
#include "sgn/pca.hpp"

namespace sgn {

FeatureMethod parse_feature_method(std::string_view text) {
  if (text == "handcrafted") return FeatureMethod::kHandcrafted;
  if (text == "wl") return FeatureMethod::kWl;
  throw Error("unknown feature method '" + std::string(text) + "' (expected handcrafted or wl)");
}

std::string_view to_string(FeatureMethod m) {
  return m == FeatureMethod::kHandcrafted ? "handcrafted" : "wl";
}

OrderCombination parse_order_combination(std::string_view text) {
  OrderCombination out;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t()"));
    token.erase(token.find_last_not_of(" \t()") + 1);
    if (token.empty()) continue;
    std::size_t used = 0;
    int k = -1;
    try {
      k = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || k < 0) throw Error("invalid SGN order '" + token + "'");
    out.push_back(k);
  }
  if (out.empty()) throw Error("empty order combination '" + std::string(text) + "'");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<OrderCombination> parse_order_combinations(std::string_view text) {
  std::vector<OrderCombination> out;
  std::string chunk;
  for (char c : text) {
    if (c == ';' || c == ' ') {
      if (chunk.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_order_combination(chunk));
      chunk.clear();
    } else {
      chunk.push_back(c);
    }
  }
  if (chunk.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_order_combination(chunk));
  if (out.empty()) throw Error("no order combinations given");
  return out;
}

std::string format_orders(const OrderCombination& orders) {
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(orders[i]);
  }
  return out;
}

std::vector<OrderCombination> default_combinations() {
  return {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
}

OrderBlocks compute_order_blocks(const GraphDataset& ds, int max_order, const FeatureOptions& fopts,
                                 Execution exec) {
  using clock = std::chrono::steady_clock;
  if (max_order < 0) throw Error("maximum SGN order must be non-negative");
  if (fopts.rule == SgnRule::kAlgorithm2Literal && max_order > 2) {
    throw Error("algorithm2-literal rule is defined for order 2 only");
  }
  OrderBlocks out;
  std::vector<Graph> previous = ds.graphs;
  for (int k = 0; k <= max_order; ++k) {
    auto t0 = clock::now();
    std::vector<Graph> graphs;
    if (k == 0) {
      graphs = ds.graphs;
    } else if (fopts.rule == SgnRule::kAlgorithm2Literal && k == 2) {
      graphs = build_sgn_graphs(ds.graphs, {2, SgnRule::kAlgorithm2Literal}, exec);
    } else {
      // Order k of the iterated rule is the line graph of order k-1.
      graphs = build_sgn_graphs(previous, {1, SgnRule::kIteratedLine}, exec);
    }
    auto t1 = clock::now();
    FeatureMatrix block;
    if (fopts.method == FeatureMethod::kHandcrafted) {
      block = handcrafted_matrix(graphs, k, fopts.handcrafted, exec);
    } else {
      WlConfig cfg = fopts.wl;
      const bool labelled = k == 0 && !graphs.empty() && graphs.front().node_labels().has_value();
      if (!labelled) cfg.init = WlInit::kDegree;
      block = wl_matrix(graphs, k, cfg);
    }
    auto t2 = clock::now();
    out.blocks.push_back(std::move(block));
    out.transform_seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
    out.feature_seconds.push_back(std::chrono::duration<double>(t2 - t1).count());
    previous = std::move(graphs);
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t repetition, std::uint64_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(repetition), static_cast<std::uint32_t>(attempt)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

namespace {

struct RepetitionOutcome {
  double f1 = 0.0;
  Eigen::VectorXd importance;
  int resamples = 0;
  int pca_dim = 0;
};

Eigen::MatrixXd take_rows(const Eigen::MatrixXd& x, std::span<const std::size_t> rows) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), x.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = x.row(static_cast<Eigen::Index>(rows[i]));
  }
  return out;
}

RepetitionOutcome run_repetition(const Eigen::MatrixXd& x, std::span<const int> labels,
                                 Eigen::Index target_dim, const ExperimentOptions& opts, int rep) {
  const std::size_t n = labels.size();
  const auto n_train = static_cast<std::size_t>(std::clamp<long>(
      std::lround(opts.train_frac * static_cast<double>(n)), 2L, static_cast<long>(n) - 1));

  RepetitionOutcome out;
  std::vector<std::size_t> order(n);
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0;; ++attempt) {
    if (attempt == kMaxAttempts) {
      throw Error("could not draw a training split containing both classes");
    }
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(derive_seed(opts.seed, static_cast<std::uint64_t>(rep),
                                    static_cast<std::uint64_t>(attempt)));
    std::shuffle(order.begin(), order.end(), rng);
    int pos = 0;
    for (std::size_t i = 0; i < n_train; ++i) pos += labels[order[i]];
    if (pos > 0 && pos < static_cast<int>(n_train)) break;
    ++out.resamples;
  }
  const std::span<const std::size_t> train_idx(order.data(), n_train);
  const std::span<const std::size_t> test_idx(order.data() + n_train, n - n_train);

  std::vector<int> y_train, y_test;
  for (auto i : train_idx) y_train.push_back(labels[i]);
  for (auto i : test_idx) y_test.push_back(labels[i]);

  const Eigen::MatrixXd x_train = take_rows(x, train_idx);
  const Eigen::MatrixXd x_test = take_rows(x, test_idx);

  const PcaModel pca = fit_pca(x_train, std::min(target_dim, x.cols()));
  Eigen::MatrixXd p_train = apply_pca(pca, x_train);
  Eigen::MatrixXd p_test = apply_pca(pca, x_test);
  Eigen::RowVectorXd mean, scale;
  standardization(p_train, mean, scale);
  p_train = (p_train.rowwise() - mean).array().rowwise() / scale.array();
  p_test = (p_test.rowwise() - mean).array().rowwise() / scale.array();

  const LogRegModel model = train_logreg(p_train, y_train, {opts.reg, 200, 1e-6});
  out.f1 = f1_score(y_test, model.predict(p_test)).f1;
  out.pca_dim = static_cast<int>(pca.dim());

  const Eigen::VectorXd back =
      pca.components.transpose() * (model.weights.array() / scale.transpose().array()).matrix();
  const auto imp = feature_importance(std::span<const double>(back.data(), static_cast<std::size_t>(back.size())));
  out.importance = Eigen::Map<const Eigen::VectorXd>(imp.percent.data(), static_cast<Eigen::Index>(imp.percent.size()));
  return out;
}

}  // namespace

CombinationResult run_combination(std::span<const FeatureMatrix> blocks, std::span<const int> labels,
                                  const OrderCombination& orders, const ExperimentOptions& opts) {
  if (opts.repetitions < 1) throw Error("repetitions must be at least 1");
  if (!(opts.train_frac > 0.0 && opts.train_frac < 1.0)) throw Error("train fraction must lie in (0, 1)");
  if (blocks.empty()) throw Error("no feature blocks");
  if (orders.empty()) throw Error("empty order combination");
  if (labels.size() < 3) throw Error("need at least three graphs");
  if (static_cast<Eigen::Index>(labels.size()) != blocks[0].rows()) {
    throw Error("label count does not match feature rows");
  }

  std::vector<FeatureMatrix> chosen;
  for (int k : orders) {
    if (k < 0 || static_cast<std::size_t>(k) >= blocks.size()) {
      throw Error("order " + std::to_string(k) + " has no feature block");
    }
    chosen.push_back(blocks[static_cast<std::size_t>(k)]);
  }
  const FeatureMatrix x = concat_orders(chosen);
  const Eigen::Index target_dim = blocks[0].cols();

  std::vector<RepetitionOutcome> reps(static_cast<std::size_t>(opts.repetitions));
  if (opts.exec == Execution::kSerial) {
    for (int r = 0; r < opts.repetitions; ++r) {
      reps[static_cast<std::size_t>(r)] = run_repetition(x.values, labels, target_dim, opts, r);
    }
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < opts.repetitions; ++r) {
      try {
        reps[static_cast<std::size_t>(r)] = run_repetition(x.values, labels, target_dim, opts, r);
      } catch (...) {
#pragma omp critical(sgn_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  CombinationResult res;
  res.orders = orders;
  res.feature_names = x.names;
  Eigen::VectorXd importance = Eigen::VectorXd::Zero(x.cols());
  for (const auto& r : reps) {
    res.f1_per_rep.push_back(r.f1);
    importance += r.importance;
    res.resampled_splits += r.resamples;
    res.pca_dim = r.pca_dim;
  }
  const double count = static_cast<double>(reps.size());
  res.mean_f1 = std::accumulate(res.f1_per_rep.begin(), res.f1_per_rep.end(), 0.0) / count;
  if (reps.size() > 1) {
    double ss = 0.0;
    for (double f : res.f1_per_rep) ss += (f - res.mean_f1) * (f - res.mean_f1);
    res.std_f1 = std::sqrt(ss / (count - 1.0));
  }
  importance /= count;
  res.importance_pct.assign(importance.data(), importance.data() + importance.size());
  return res;
}

ExperimentResult run_experiment(std::span<const FeatureMatrix> blocks, std::span<const int> labels,
                                std::span<const OrderCombination> combinations,
                                const ExperimentOptions& opts) {
  ExperimentResult out;
  for (const auto& combo : combinations) {
    out.combinations.push_back(run_combination(blocks, labels, combo, opts));
  }
  const CombinationResult* baseline = nullptr;
  for (const auto& c : out.combinations) {
    if (c.orders == OrderCombination{0}) baseline = &c;
  }
  if (baseline && baseline->mean_f1 > 0) {
    const double base = baseline->mean_f1;
    for (auto& c : out.combinations) c.gain_pct = gain(c.mean_f1, base);
  }
  return out;
}

ExperimentResult run_experiment(const GraphDataset& ds, const FeatureOptions& fopts,
                                std::span<const OrderCombination> combinations,
                                const ExperimentOptions& opts) {
  int max_order = 0;
  for (const auto& c : combinations) {
    for (int k : c) max_order = std::max(max_order, k);
  }
  const OrderBlocks ob = compute_order_blocks(ds, max_order, fopts, opts.exec);
  return run_experiment(ob.blocks, ds.labels, combinations, opts);
}

}  // namespace sgn
