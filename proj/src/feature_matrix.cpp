#include "sgn/feature_matrix.hpp"

#include <cstddef>
#include <exception>

namespace sgn {

namespace {

// Runs body(i) for i in [0, n); the first exception thrown by any worker is
// rethrown after the loop.
template <typename Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(sgn_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

FeatureMatrix concat_orders(std::span<const FeatureMatrix> blocks) {
  FeatureMatrix out;
  if (blocks.empty()) return out;
  const Eigen::Index rows = blocks.front().rows();
  Eigen::Index cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) {
      throw Error("cannot concatenate feature blocks with " + std::to_string(rows) + " and " +
                  std::to_string(b.rows()) + " rows");
    }
    cols += b.cols();
  }
  out.values.resize(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.values.middleCols(at, b.cols()) = b.values;
    at += b.cols();
    out.names.insert(out.names.end(), b.names.begin(), b.names.end());
    out.source_order.insert(out.source_order.end(), b.source_order.begin(), b.source_order.end());
  }
  return out;
}

std::vector<Graph> build_sgn_graphs(std::span<const Graph> graphs, const SgnConfig& cfg,
                                    Execution exec) {
  std::vector<Graph> out(graphs.size());
  for_each_index(graphs.size(), exec, [&](std::size_t i) {
    if (cfg.order == 0) {
      out[i] = graphs[i];
      return;
    }
    out[i] = build_sgn(graphs[i], cfg).graph;
    out[i].set_class_label(graphs[i].class_label());
    out[i].set_graph_id(graphs[i].graph_id());
  });
  return out;
}

FeatureMatrix handcrafted_matrix(std::span<const Graph> graphs, int order, const FeatureConfig& cfg,
                                 Execution exec) {
  FeatureMatrix m;
  m.values.resize(static_cast<Eigen::Index>(graphs.size()), kNumHandcrafted);
  for (auto name : kHandcraftedNames) {
    m.names.push_back("o" + std::to_string(order) + "_" + std::string(name));
    m.source_order.push_back(order);
  }
  for_each_index(graphs.size(), exec, [&](std::size_t i) {
    const auto values = extract_features(graphs[i], cfg).values();
    for (std::size_t j = 0; j < kNumHandcrafted; ++j) {
      m.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = values[j];
    }
  });
  return m;
}

FeatureMatrix wl_matrix(std::span<const Graph> graphs, int order, const WlConfig& cfg) {
  FeatureMatrix m;
  m.values = wl_feature_matrix(graphs, cfg);
  for (Eigen::Index j = 0; j < m.values.cols(); ++j) {
    m.names.push_back("o" + std::to_string(order) + "_wl" + std::to_string(j));
    m.source_order.push_back(order);
  }
  return m;
}

}  // namespace sgn
