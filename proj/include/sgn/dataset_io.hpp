// Dataset loading (TU text format, edge lists) and graph output.

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "sgn/graph.hpp"
#include "sgn/transform.hpp"

namespace sgn {

struct GraphDataset {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<int> labels;  // binarised to {0, 1}
};

struct DatasetStats {
  std::size_t num_graphs = 0;
  std::size_t num_classes = 0;
  std::size_t num_positive = 0;
  std::size_t num_negative = 0;

  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

DatasetStats dataset_stats(const GraphDataset& ds);

/// Reads {name}_A.txt, {name}_graph_indicator.txt, {name}_graph_labels.txt
/// and, when present, {name}_node_labels.txt from directory. Graph labels
/// are binarised by sorted order (smaller raw value -> 0).
GraphDataset load_tu_dataset(const std::filesystem::path& directory, const std::string& name);

/// Resolves a dataset argument: an existing directory is loaded with its
/// basename as the name; otherwise the argument is taken as a dataset name
/// under data_root (directory data_root/name).
GraphDataset load_dataset(const std::string& dataset, const std::filesystem::path& data_root);

/// Whitespace-separated "u v" pairs, '#' comments, optional "# N=<int>".
Graph load_edge_list(const std::filesystem::path& path);
Graph parse_edge_list(const std::string& text);

/// Writes "# N=<n>" then one "u v" line per link (u < v).
void write_graph(const Graph& g, const std::filesystem::path& path);

/// Edge list as above plus a sidecar at path + ".prov" with one line per
/// SGN node: "<node> <provenance ids joined by _> <identity>".
void write_graph(const SgnGraph& s, const std::filesystem::path& path);

std::filesystem::path provenance_path(const std::filesystem::path& edge_list_path);

}  // namespace sgn
