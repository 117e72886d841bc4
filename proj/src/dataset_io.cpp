#include "sgn/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sgn {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

long parse_long(std::string_view text, const fs::path& file, std::size_t line_no) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) {
    throw Error(file.string() + ":" + std::to_string(line_no) + ": empty field");
  }
  text = text.substr(first, last - first + 1);
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(file.string() + ":" + std::to_string(line_no) + ": expected an integer, got '" +
                std::string(text) + "'");
  }
  return value;
}

std::vector<long> read_column(const fs::path& path) {
  std::vector<long> out;
  const auto lines = read_lines(path);
  out.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) out.push_back(parse_long(lines[i], path, i + 1));
  return out;
}

}  // namespace

DatasetStats dataset_stats(const GraphDataset& ds) {
  DatasetStats s;
  s.num_graphs = ds.graphs.size();
  s.num_classes = std::set<int>(ds.labels.begin(), ds.labels.end()).size();
  s.num_positive = static_cast<std::size_t>(std::count(ds.labels.begin(), ds.labels.end(), 1));
  s.num_negative = s.num_graphs - s.num_positive;
  return s;
}

GraphDataset load_tu_dataset(const fs::path& directory, const std::string& name) {
  const fs::path a_path = directory / (name + "_A.txt");
  const fs::path ind_path = directory / (name + "_graph_indicator.txt");
  const fs::path lab_path = directory / (name + "_graph_labels.txt");
  const fs::path node_lab_path = directory / (name + "_node_labels.txt");
  for (const auto& p : {a_path, ind_path, lab_path}) {
    if (!fs::exists(p)) throw Error("missing dataset file " + p.string());
  }

  const std::vector<long> indicator = read_column(ind_path);
  const std::vector<long> raw_labels = read_column(lab_path);
  const std::size_t num_graphs = raw_labels.size();
  if (num_graphs == 0) throw Error(lab_path.string() + ": no graphs");

  // Global node n (1-indexed) -> (graph, local id) in order of appearance.
  std::vector<std::size_t> graph_of(indicator.size());
  std::vector<NodeId> local_of(indicator.size());
  std::vector<std::size_t> sizes(num_graphs, 0);
  for (std::size_t n = 0; n < indicator.size(); ++n) {
    const long gid = indicator[n];
    if (gid < 1 || static_cast<std::size_t>(gid) > num_graphs) {
      throw Error(ind_path.string() + ":" + std::to_string(n + 1) + ": graph id " +
                  std::to_string(gid) + " has no entry in " + lab_path.filename().string());
    }
    graph_of[n] = static_cast<std::size_t>(gid - 1);
    local_of[n] = static_cast<NodeId>(sizes[graph_of[n]]++);
  }

  std::vector<std::vector<Edge>> edges(num_graphs);
  const auto a_lines = read_lines(a_path);
  for (std::size_t i = 0; i < a_lines.size(); ++i) {
    const std::string& line = a_lines[i];
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(a_path.string() + ":" + std::to_string(i + 1) + ": expected 'i, j'");
    }
    const long u = parse_long(std::string_view(line).substr(0, comma), a_path, i + 1);
    const long v = parse_long(std::string_view(line).substr(comma + 1), a_path, i + 1);
    for (long x : {u, v}) {
      if (x < 1 || static_cast<std::size_t>(x) > indicator.size()) {
        throw Error(a_path.string() + ":" + std::to_string(i + 1) + ": unknown node " +
                    std::to_string(x));
      }
    }
    const std::size_t gu = graph_of[static_cast<std::size_t>(u - 1)];
    const std::size_t gv = graph_of[static_cast<std::size_t>(v - 1)];
    if (gu != gv) {
      throw Error(a_path.string() + ":" + std::to_string(i + 1) + ": link joins graphs " +
                  std::to_string(gu + 1) + " and " + std::to_string(gv + 1));
    }
    edges[gu].emplace_back(local_of[static_cast<std::size_t>(u - 1)],
                           local_of[static_cast<std::size_t>(v - 1)]);
  }

  std::optional<std::vector<long>> node_labels;
  if (fs::exists(node_lab_path)) {
    node_labels = read_column(node_lab_path);
    if (node_labels->size() != indicator.size()) {
      throw Error(node_lab_path.string() + ": " + std::to_string(node_labels->size()) +
                  " labels for " + std::to_string(indicator.size()) + " nodes");
    }
  }

  const std::set<long> distinct(raw_labels.begin(), raw_labels.end());
  if (distinct.size() != 2) {
    throw Error(lab_path.string() + ": expected exactly two distinct graph labels, found " +
                std::to_string(distinct.size()));
  }
  const long negative_raw = *distinct.begin();

  GraphDataset ds;
  ds.name = name;
  ds.graphs.reserve(num_graphs);
  ds.labels.reserve(num_graphs);
  std::vector<std::vector<int>> per_graph_labels(num_graphs);
  if (node_labels) {
    for (std::size_t g = 0; g < num_graphs; ++g) per_graph_labels[g].reserve(sizes[g]);
    for (std::size_t n = 0; n < indicator.size(); ++n) {
      per_graph_labels[graph_of[n]].push_back(static_cast<int>((*node_labels)[n]));
    }
  }
  for (std::size_t g = 0; g < num_graphs; ++g) {
    if (sizes[g] == 0) {
      throw Error(ind_path.string() + ": graph " + std::to_string(g + 1) + " has no nodes");
    }
    Graph graph(sizes[g], edges[g]);
    if (node_labels) graph.set_node_labels(std::move(per_graph_labels[g]));
    const int label = raw_labels[g] == negative_raw ? 0 : 1;
    graph.set_class_label(label);
    graph.set_graph_id(static_cast<int>(g));
    ds.graphs.push_back(std::move(graph));
    ds.labels.push_back(label);
  }
  return ds;
}

GraphDataset load_dataset(const std::string& dataset, const fs::path& data_root) {
  fs::path dir(dataset);
  if (fs::is_directory(dir)) {
    auto name = fs::absolute(dir).lexically_normal().filename().string();
    if (name.empty()) name = fs::absolute(dir).lexically_normal().parent_path().filename().string();
    return load_tu_dataset(dir, name);
  }
  dir = data_root / dataset;
  if (!fs::is_directory(dir)) {
    throw Error("dataset '" + dataset + "' not found (looked for directory " + dir.string() + ")");
  }
  return load_tu_dataset(dir, dataset);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::string comment = line.substr(hash + 1);
      comment.erase(0, comment.find_first_not_of(" \t"));
      if (comment.rfind("N=", 0) == 0) {
        n = std::max(n, static_cast<std::size_t>(parse_long(comment.substr(2), "<edge list>", line_no)));
      }
      line.resize(hash);
    }
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw Error("edge list line " + std::to_string(line_no) + ": expected two node ids");
    }
    const long u = parse_long(a, "<edge list>", line_no);
    const long v = parse_long(b, "<edge list>", line_no);
    if (u < 0 || v < 0) {
      throw Error("edge list line " + std::to_string(line_no) + ": negative node id");
    }
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    n = std::max(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  return Graph(n, edges);
}

Graph load_edge_list(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_edge_list(buf.str());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_graph(const Graph& g, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << "# N=" << g.num_nodes() << "\n";
  for (const auto& [u, v] : g.links()) out << u << " " << v << "\n";
  if (!out) throw Error("write failed for " + path.string());
}

fs::path provenance_path(const fs::path& edge_list_path) {
  fs::path p = edge_list_path;
  p += ".prov";
  return p;
}

void write_graph(const SgnGraph& s, const fs::path& path) {
  write_graph(s.graph, path);
  const fs::path side = provenance_path(path);
  std::ofstream out(side);
  if (!out) throw Error("cannot write " + side.string());
  for (std::size_t i = 0; i < s.provenance.size(); ++i) {
    out << i << " ";
    for (std::size_t j = 0; j < s.provenance[i].size(); ++j) {
      out << (j ? "_" : "") << s.provenance[i][j];
    }
    out << " " << s.identity[i] << "\n";
  }
  if (!out) throw Error("write failed for " + side.string());
}

}  // namespace sgn
