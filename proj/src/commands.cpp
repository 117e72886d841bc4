#include "sgn/commands.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgn/dataset_io.hpp"
#include "sgn/metrics.hpp"

namespace sgn {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r"));
  const auto last = s.find_last_not_of(" \t\r");
  s.erase(last == std::string::npos ? 0 : last + 1);
  return s;
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error("config key '" + key + "': cannot parse '" + value + "'");
  }
  return out;
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory " + dir.string() + ": " + ec.message());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << text;
  if (!f) throw Error("write failed for " + path.string());
}

std::string csv_orders(const OrderCombination& orders) { return "\"" + format_orders(orders) + "\""; }

}  // namespace

void ExperimentConfig::apply_profile(const std::string& name) {
  if (name == "quick") {
    repetitions = 100;
  } else if (name == "full") {
    repetitions = 500;
  } else {
    throw Error("unknown profile '" + name + "' (expected quick or full)");
  }
  profile = name;
}

void ExperimentConfig::set(const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "dataset") {
    dataset = value;
  } else if (key == "data_dir") {
    data_dir = value;
  } else if (key == "profile") {
    apply_profile(value);
  } else if (key == "method") {
    method = parse_feature_method(value);
  } else if (key == "orders" || key == "combinations") {
    combinations = parse_order_combinations(value);
  } else if (key == "rule") {
    rule = parse_sgn_rule(value);
  } else if (key == "k_max") {
    k_max = parse_number<int>(key, value);
  } else if (key == "repetitions" || key == "reps") {
    repetitions = parse_number<int>(key, value);
  } else if (key == "train_frac") {
    train_frac = parse_number<double>(key, value);
  } else if (key == "reg") {
    reg = parse_number<double>(key, value);
  } else if (key == "seed") {
    seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "wl_height") {
    wl_height = parse_number<int>(key, value);
  } else if (key == "out") {
    out = value;
  } else {
    throw Error("unknown config key '" + key + "'");
  }
}

void ExperimentConfig::apply_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error("config line " + std::to_string(line_no) + ": expected key = value");
    }
    set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void ExperimentConfig::apply_file(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  try {
    apply_text(buf.str());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void ExperimentConfig::validate() const {
  if (dataset.empty()) throw Error("no dataset given");
  if (combinations.empty()) throw Error("no order combinations given");
  if (k_max < 0) throw Error("k_max must be non-negative");
  for (const auto& c : combinations) {
    if (c.empty()) throw Error("empty order combination");
    for (int k : c) {
      if (k > k_max) {
        throw Error("order " + std::to_string(k) + " exceeds k_max = " + std::to_string(k_max));
      }
    }
  }
  if (repetitions < 1) throw Error("repetitions must be at least 1");
  if (!(train_frac > 0.0 && train_frac < 1.0)) throw Error("train_frac must lie in (0, 1)");
  if (!(reg >= 0.0)) throw Error("reg must be non-negative");
  if (wl_height < 0) throw Error("wl_height must be non-negative");
  if (rule == SgnRule::kAlgorithm2Literal && k_max > 2) {
    throw Error("algorithm2-literal rule supports orders up to 2");
  }
}

fs::path resolve_data_root(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv(kDataDirEnv); env && *env) return env;
  return "data";
}

int cmd_info(const std::string& dataset, const fs::path& data_root, std::ostream& out) {
  const GraphDataset ds = load_dataset(dataset, data_root);
  const DatasetStats s = dataset_stats(ds);
  out << s.num_graphs << " " << s.num_classes << " " << s.num_positive << " " << s.num_negative << "\n";
  return 0;
}

int cmd_transform(const TransformArgs& args, std::ostream& out) {
  if (args.order < 0) throw Error("order must be non-negative");
  if (args.out.empty()) throw Error("--out is required");
  if (args.input.empty() == args.dataset.empty()) {
    throw Error("give exactly one of --input (edge list) or --dataset");
  }
  if (args.rule == SgnRule::kAlgorithm2Literal && args.order != 2) {
    throw Error("algorithm2-literal rule is defined for order 2 only");
  }

  auto transform_one = [&](const Graph& g, const fs::path& path, std::vector<std::size_t>& nodes,
                           std::vector<std::size_t>& links) {
    SgnGraph s = as_sgn(g);
    nodes[0] += s.graph.num_nodes();
    links[0] += s.graph.num_links();
    for (int k = 1; k <= args.order; ++k) {
      if (args.rule == SgnRule::kAlgorithm2Literal && k == 2) {
        s = sgn2_literal(g);
      } else {
        s = line_graph(s);
      }
      nodes[static_cast<std::size_t>(k)] += s.graph.num_nodes();
      links[static_cast<std::size_t>(k)] += s.graph.num_links();
    }
    write_graph(s, path);
  };

  std::vector<std::size_t> nodes(static_cast<std::size_t>(args.order) + 1, 0);
  std::vector<std::size_t> links(nodes.size(), 0);
  if (!args.input.empty()) {
    const Graph g = load_edge_list(args.input);
    if (args.out.has_parent_path()) ensure_directory(args.out.parent_path());
    transform_one(g, args.out, nodes, links);
  } else {
    const GraphDataset ds = load_dataset(args.dataset, args.data_root);
    ensure_directory(args.out);
    for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
      transform_one(ds.graphs[i], args.out / ("graph_" + std::to_string(i) + ".edges"), nodes, links);
    }
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    out << "order " << k << ": " << nodes[k] << " nodes " << links[k] << " links\n";
  }
  return 0;
}

int cmd_features(const FeaturesArgs& args, std::ostream& out) {
  if (args.out.empty()) throw Error("--out is required");
  if (args.orders.empty()) throw Error("no orders requested");
  const GraphDataset ds = load_dataset(args.dataset, args.data_root);
  int max_order = 0;
  for (int k : args.orders) max_order = std::max(max_order, k);

  FeatureOptions fopts;
  fopts.method = args.method;
  fopts.rule = args.rule;
  fopts.wl.height = args.wl_height;
  const OrderBlocks ob = compute_order_blocks(ds, max_order, fopts);

  ensure_directory(args.out);
  for (int k : args.orders) {
    const FeatureMatrix& m = ob.blocks[static_cast<std::size_t>(k)];
    std::ostringstream csv;
    csv << "graph_id,order";
    const std::string prefix = "o" + std::to_string(k) + "_";
    for (const auto& name : m.names) csv << "," << name.substr(prefix.size());
    csv << "\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      csv << ds.graphs[static_cast<std::size_t>(r)].graph_id().value_or(static_cast<int>(r)) << "," << k;
      for (Eigen::Index c = 0; c < m.cols(); ++c) csv << "," << fmt(m.values(r, c));
      csv << "\n";
    }
    const fs::path path =
        args.out / (ds.name + "_" + std::string(to_string(args.method)) + "_order" + std::to_string(k) + ".csv");
    write_text(path, csv.str());
    out << "wrote " << path.string() << " (" << m.rows() << " rows x " << m.cols() << " features)\n";
  }
  return 0;
}

int cmd_benchmark(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log) {
  cfg.validate();
  const fs::path out_dir = cfg.out;
  ensure_directory(out_dir);
  const GraphDataset ds = load_dataset(cfg.dataset, resolve_data_root(cfg.data_dir));

  int max_order = 0;
  for (const auto& c : cfg.combinations) {
    for (int k : c) max_order = std::max(max_order, k);
  }
  FeatureOptions fopts;
  fopts.method = cfg.method;
  fopts.rule = cfg.rule;
  fopts.wl.height = cfg.wl_height;
  const OrderBlocks ob = compute_order_blocks(ds, max_order, fopts);

  ExperimentOptions eopts;
  eopts.repetitions = cfg.repetitions;
  eopts.train_frac = cfg.train_frac;
  eopts.reg = cfg.reg;
  eopts.seed = cfg.seed;

  const std::string header = "dataset,method,orders,mean_f1,std_f1,gain_pct,reps,seed\n";
  std::ostringstream csv;
  csv << header;
  std::ostringstream imp_csv;
  imp_csv << "orders,feature,importance_pct\n";

  ordered_json doc;
  doc["config"] = {
      {"dataset", cfg.dataset},         {"dataset_name", ds.name},
      {"profile", cfg.profile},         {"method", to_string(cfg.method)},
      {"rule", to_string(cfg.rule)},    {"k_max", cfg.k_max},
      {"repetitions", cfg.repetitions}, {"train_frac", cfg.train_frac},
      {"reg", cfg.reg},                 {"seed", cfg.seed},
      {"wl_height", cfg.wl_height},     {"pca_target_dim", ob.blocks[0].cols()},
      {"f1_units", "percent"},
  };
  doc["combinations"] = ordered_json::array();

  std::vector<double> train_seconds;
  std::vector<CombinationResult> done;
  double baseline = std::numeric_limits<double>::quiet_NaN();
  int failures = 0;
  for (const auto& combo : cfg.combinations) {
    const auto t0 = std::chrono::steady_clock::now();
    CombinationResult r;
    try {
      r = run_combination(ob.blocks, ds.labels, combo, eopts);
    } catch (const Error& e) {
      log << "combination (" << format_orders(combo) << ") failed: " << e.what() << "\n";
      ++failures;
      train_seconds.push_back(0.0);
      continue;
    }
    train_seconds.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    if (combo == OrderCombination{0}) baseline = r.mean_f1;
    done.push_back(std::move(r));
  }
  if (std::isnan(baseline)) {
    log << "note: combination (0) not requested; gains left empty\n";
  }

  for (auto& r : done) {
    if (!std::isnan(baseline) && baseline > 0) r.gain_pct = gain(r.mean_f1, baseline);
    csv << ds.name << "," << to_string(cfg.method) << "," << csv_orders(r.orders) << ","
        << fmt(100.0 * r.mean_f1) << "," << fmt(100.0 * r.std_f1) << "," << fmt(r.gain_pct) << ","
        << cfg.repetitions << "," << cfg.seed << "\n";
    for (std::size_t j = 0; j < r.feature_names.size(); ++j) {
      imp_csv << csv_orders(r.orders) << "," << r.feature_names[j] << "," << fmt(r.importance_pct[j]) << "\n";
    }
    ordered_json entry = {
        {"orders", r.orders},
        {"mean_f1", 100.0 * r.mean_f1},
        {"std_f1", 100.0 * r.std_f1},
        {"gain_pct", std::isnan(r.gain_pct) ? ordered_json(nullptr) : ordered_json(r.gain_pct)},
        {"pca_dim", r.pca_dim},
        {"resampled_splits", r.resampled_splits},
    };
    entry["f1_per_rep"] = r.f1_per_rep;
    ordered_json imp = ordered_json::object();
    for (std::size_t j = 0; j < r.feature_names.size(); ++j) imp[r.feature_names[j]] = r.importance_pct[j];
    entry["importance_pct"] = std::move(imp);
    doc["combinations"].push_back(std::move(entry));
    out << "SGN(" << format_orders(r.orders) << ")  F1 " << fmt(std::round(1e4 * r.mean_f1) / 100.0)
        << " +- " << fmt(std::round(1e4 * r.std_f1) / 100.0);
    if (!std::isnan(r.gain_pct)) out << "  gain " << fmt(std::round(100.0 * r.gain_pct) / 100.0) << "%";
    out << "\n";
  }

  write_text(out_dir / "results.csv", csv.str());
  write_text(out_dir / "importance.csv", imp_csv.str());
  write_text(out_dir / "results.json", doc.dump(2) + "\n");

  ordered_json timing;
  timing["transform_seconds"] = ob.transform_seconds;
  timing["feature_seconds"] = ob.feature_seconds;
  ordered_json train = ordered_json::object();
  for (std::size_t i = 0; i < cfg.combinations.size(); ++i) {
    train[format_orders(cfg.combinations[i])] = train_seconds[i];
  }
  timing["training_seconds"] = std::move(train);
  write_text(out_dir / "timing.json", timing.dump(2) + "\n");

  for (std::size_t k = 1; k < ob.transform_seconds.size(); ++k) {
    log << "order " << k << ": transform " << fmt(ob.transform_seconds[k]) << " s, features "
        << fmt(ob.feature_seconds[k]) << " s\n";
    if (k >= 2 && ob.transform_seconds[k] < ob.transform_seconds[k - 1]) {
      log << "note: SGN construction time for order " << k << " is below order " << k - 1 << "\n";
    }
  }
  return failures == 0 ? 0 : 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgraph-network construction, structural features and classification benchmark"};
  app.require_subcommand(1);

  std::string data_dir;
  app.add_option("--data-dir", data_dir, "Dataset root (default: $SGN_DATA_DIR, then ./data)");

  std::string dataset;
  auto* info = app.add_subcommand("info", "Print graphs, classes, positives and negatives");
  info->add_option("--dataset", dataset, "Dataset name or TU directory")->required();

  TransformArgs targs;
  std::string rule_text = "iterated-line";
  std::string out_path;
  auto* transform = app.add_subcommand("transform", "Build an SGN and write it as an edge list");
  transform->add_option("--input", targs.input, "Edge-list file");
  transform->add_option("--dataset", targs.dataset, "Dataset name or TU directory");
  transform->add_option("--order", targs.order, "SGN order")->check(CLI::NonNegativeNumber);
  transform->add_option("--rule", rule_text, "iterated-line | algorithm2-literal");
  transform->add_option("--out", out_path, "Output file (edge list) or directory (dataset)")->required();

  FeaturesArgs fargs;
  std::string method_text = "handcrafted";
  std::string orders_text = "0";
  auto* features = app.add_subcommand("features", "Export per-order feature CSVs");
  features->add_option("--dataset", fargs.dataset, "Dataset name or TU directory")->required();
  features->add_option("--method", method_text, "handcrafted | wl");
  features->add_option("--orders", orders_text, "Orders to export, e.g. 0,1,2");
  features->add_option("--rule", rule_text, "iterated-line | algorithm2-literal");
  features->add_option("--wl-height", fargs.wl_height, "WL iterations");
  features->add_option("--out", out_path, "Output directory")->required();

  std::string config_path, b_dataset, b_method, b_orders, b_rule, b_profile, b_out;
  int b_reps = 0, b_wl = 0, b_kmax = 0;
  double b_frac = 0, b_reg = 0;
  std::uint64_t b_seed = 0;
  auto* bench = app.add_subcommand("benchmark", "Repeated-split classification over order combinations");
  bench->add_option("--config", config_path, "key = value config file");
  auto* o_dataset = bench->add_option("--dataset", b_dataset);
  auto* o_profile = bench->add_option("--profile", b_profile, "quick | full");
  auto* o_method = bench->add_option("--method", b_method, "handcrafted | wl");
  auto* o_orders = bench->add_option("--orders", b_orders, "Combinations, e.g. \"0;1;2;0,1;0,1,2\"");
  auto* o_rule = bench->add_option("--rule", b_rule, "iterated-line | algorithm2-literal");
  auto* o_reps = bench->add_option("--reps", b_reps);
  auto* o_frac = bench->add_option("--train-frac", b_frac);
  auto* o_reg = bench->add_option("--reg", b_reg);
  auto* o_seed = bench->add_option("--seed", b_seed);
  auto* o_wl = bench->add_option("--wl-height", b_wl);
  auto* o_kmax = bench->add_option("--k-max", b_kmax);
  auto* o_out = bench->add_option("--out", b_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    const fs::path root = resolve_data_root(data_dir);
    if (info->parsed()) return cmd_info(dataset, root, out);
    if (transform->parsed()) {
      targs.rule = parse_sgn_rule(rule_text);
      targs.out = out_path;
      targs.data_root = root;
      return cmd_transform(targs, out);
    }
    if (features->parsed()) {
      fargs.method = parse_feature_method(method_text);
      fargs.orders = parse_order_combination(orders_text);
      fargs.rule = parse_sgn_rule(rule_text);
      fargs.out = out_path;
      fargs.data_root = root;
      return cmd_features(fargs, out);
    }
    ExperimentConfig cfg;
    if (!config_path.empty()) cfg.apply_file(config_path);
    if (!data_dir.empty()) cfg.data_dir = data_dir;
    if (*o_profile) cfg.apply_profile(b_profile);
    if (*o_dataset) cfg.dataset = b_dataset;
    if (*o_method) cfg.method = parse_feature_method(b_method);
    if (*o_orders) cfg.combinations = parse_order_combinations(b_orders);
    if (*o_rule) cfg.rule = parse_sgn_rule(b_rule);
    if (*o_reps) cfg.repetitions = b_reps;
    if (*o_frac) cfg.train_frac = b_frac;
    if (*o_reg) cfg.reg = b_reg;
    if (*o_seed) cfg.seed = b_seed;
    if (*o_wl) cfg.wl_height = b_wl;
    if (*o_kmax) cfg.k_max = b_kmax;
    if (*o_out) cfg.out = b_out;
    return cmd_benchmark(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sgn
