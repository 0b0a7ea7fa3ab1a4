#include "bundles/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bundles/bundle.hpp"
#include "bundles/export.hpp"
#include "bundles/flow.hpp"
#include "bundles/generators.hpp"
#include "bundles/graph_io.hpp"
#include "bundles/sbn.hpp"

namespace bundles {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Domain outcome such as "no bundle between the requested pair": reported,
// not an error, but distinguishable from success by exit status 1.
struct domain_result : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOpts {
  std::string out_dir = ".";
  std::vector<std::string> formats;
  int threads = 1;

  bool wants(const std::string& format, bool by_default) const {
    if (formats.empty()) return by_default;
    return std::find(formats.begin(), formats.end(), format) != formats.end();
  }

  fs::path out_path(const std::string& name) const {
    fs::create_directories(out_dir);
    return fs::path(out_dir) / name;
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out-dir", opts.out_dir, "Output directory")
      ->capture_default_str();
  cmd->add_option("--format", opts.formats,
                  "Output formats (csv, json, graphml, svg); may repeat")
      ->check(CLI::IsMember({"csv", "json", "graphml", "svg"}));
  cmd->add_option("--threads", opts.threads, "Worker threads for all-pairs sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void write_metadata(const fs::path& primary, const json& meta) {
  fs::path side = primary;
  side += ".meta.json";
  std::ofstream out(side, std::ios::binary);
  if (!out) throw schema_error("cannot write " + side.string());
  out << meta.dump(2) << "\n";
}

NodeId resolve_node(const LoadedGraph& loaded, const std::string& token) {
  if (loaded.labeled) {
    for (std::size_t k = 0; k < loaded.labels.size(); ++k)
      if (loaded.labels[k] == token) return static_cast<NodeId>(k);
    throw input_error("node label '" + token + "' not present in the graph");
  }
  try {
    const NodeId v = std::stoi(token);
    if (v < 0 || v >= loaded.graph.node_count()) throw std::out_of_range("");
    return v;
  } catch (const std::exception&) {
    throw input_error("node id '" + token + "' outside 0.." +
                      std::to_string(loaded.graph.node_count() - 1));
  }
}

// Default source: the node nearest the coordinate centroid, smallest id on
// ties. Matches "take the lattice central point" for odd lattices.
NodeId centroid_node(const Graph& graph) {
  if (!graph.has_coords())
    throw input_error("graph has no coordinates; pass --source explicitly");
  const auto& coords = graph.coords();
  double cx = 0.0, cy = 0.0;
  for (const auto& [x, y] : coords) {
    cx += x;
    cy += y;
  }
  cx /= static_cast<double>(coords.size());
  cy /= static_cast<double>(coords.size());

  NodeId best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    const double dx = coords[static_cast<std::size_t>(v)][0] - cx;
    const double dy = coords[static_cast<std::size_t>(v)][1] - cy;
    const double d = dx * dx + dy * dy;
    if (d < best_d) {
      best_d = d;
      best = v;
    }
  }
  return best;
}

json node_ref(const LoadedGraph& loaded, NodeId v) {
  if (loaded.labeled) return loaded.labels[static_cast<std::size_t>(v)];
  return v;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string family;
  int rows = 0, cols = 0;
  bool periodic = false;
  double delta = 0.0, p = 0.0;
  std::uint64_t seed = 0;
  std::string out_file;
  CommonOpts common;
};

int cmd_generate(const GenerateArgs& args) {
  GeneratorConfig config;
  config.rows = args.rows;
  config.cols = args.cols;
  config.periodic = args.periodic;
  config.seed = args.seed;

  std::string stem = args.family + "_" + std::to_string(args.rows) + "x" +
                     std::to_string(args.cols);
  if (args.family == "lattice") {
    if (args.periodic) stem += "_periodic";
  } else if (args.family == "perturbed-delaunay") {
    config.delta = args.delta;
    if (args.delta == 0.0)
      throw input_error("perturbed-delaunay needs --delta > 0");
    stem =
        "perturbed_delaunay_" + std::to_string(args.rows) + "x" +
        std::to_string(args.cols) + "_delta" + format_double(args.delta) +
        "_seed" + std::to_string(args.seed);
  } else {  // ws
    config.rewire_p = args.p;
    if (args.periodic) stem += "_periodic";
    stem += "_p" + format_double(args.p) + "_seed" +
            std::to_string(args.seed);
  }

  const Graph graph = generate(config);
  const fs::path out = args.out_file.empty()
                           ? args.common.out_path(stem + ".json")
                           : fs::path(args.out_file);
  if (!args.out_file.empty() && out.has_parent_path())
    fs::create_directories(out.parent_path());
  save_graph(graph, out);

  json meta;
  meta["command"] = "generate";
  meta["family"] = args.family;
  meta["rows"] = args.rows;
  meta["cols"] = args.cols;
  meta["periodic"] = args.periodic;
  meta["delta"] = args.delta;
  meta["p"] = args.p;
  meta["seed"] = args.seed;
  meta["nodes"] = graph.node_count();
  meta["edges"] = graph.edge_count();
  write_metadata(out, meta);

  std::cout << out.string() << ": " << graph.node_count() << " nodes, "
            << graph.edge_count() << " edges\n";
  return 0;
}

// ---------------------------------------------------------------------------
// hist

struct HistArgs {
  std::string graph_file;
  std::string source;
  int lmin = 2, lmax = 7;
  CommonOpts common;
};

int cmd_hist(const HistArgs& args) {
  const LoadedGraph loaded = load_graph(args.graph_file);
  const NodeId source = args.source.empty()
                            ? centroid_node(loaded.graph)
                            : resolve_node(loaded, args.source);
  if (args.lmin < 1 || args.lmax < args.lmin)
    throw input_error("invalid L range");

  const auto hierarchy = bfs_hierarchy(loaded.graph, source);
  const LeveledDag dag = leveled_dag(loaded.graph, hierarchy);

  const fs::path detail_path = args.common.out_path("hist_detail.csv");
  const fs::path summary_path = args.common.out_path("hist_summary.csv");
  std::ofstream detail(detail_path, std::ios::binary);
  std::ofstream summary(summary_path, std::ios::binary);
  detail << "L,destination,path_count,mu_E,min_E\n";
  summary << "L,bundle_count,path_count_mean,path_count_std,mu_E_mean,"
             "mu_E_std,min_E_mean,min_E_std\n";

  const auto mean_std = [](const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double sq = 0.0;
    for (double x : xs) sq += (x - mean) * (x - mean);
    return std::pair(mean, std::sqrt(sq / static_cast<double>(xs.size())));
  };

  for (int L = args.lmin; L <= args.lmax; ++L) {
    std::vector<double> counts, means, mins;
    if (L <= hierarchy.max_level()) {
      for (NodeId dest : hierarchy.frontiers()[static_cast<std::size_t>(L)]) {
        const auto bundle = extract_bundle(dag, dest);
        const auto flow =
            equilibrium_flow(*bundle, transition_matrix(*bundle));
        const auto s = summarize(*bundle, flow);
        detail << L << ",";
        if (loaded.labeled)
          detail << loaded.labels[static_cast<std::size_t>(dest)];
        else
          detail << dest;
        detail << "," << s.path_count << "," << format_double(s.mean_width)
               << "," << format_double(s.min_width) << "\n";
        counts.push_back(static_cast<double>(s.path_count));
        means.push_back(s.mean_width);
        mins.push_back(s.min_width);
      }
    }
    summary << L << "," << counts.size();
    if (counts.empty()) {
      summary << ",,,,,,\n";
    } else {
      const auto [cm, cs] = mean_std(counts);
      const auto [mm, ms] = mean_std(means);
      const auto [nm, ns] = mean_std(mins);
      summary << "," << format_double(cm) << "," << format_double(cs) << ","
              << format_double(mm) << "," << format_double(ms) << ","
              << format_double(nm) << "," << format_double(ns) << "\n";
    }
    if (args.common.wants("svg", false) && !counts.empty()) {
      write_histogram_svg(
          counts, 20, "path counts, L=" + std::to_string(L),
          args.common.out_path("hist_paths_L" + std::to_string(L) + ".svg"));
      write_histogram_svg(
          means, 20, "effective widths, L=" + std::to_string(L),
          args.common.out_path("hist_widths_L" + std::to_string(L) + ".svg"));
    }
  }

  json meta;
  meta["command"] = "hist";
  meta["graph"] = args.graph_file;
  meta["source"] = node_ref(loaded, source);
  meta["lmin"] = args.lmin;
  meta["lmax"] = args.lmax;
  if (loaded.labeled) meta["labels"] = loaded.labels;
  write_metadata(detail_path, meta);
  std::cout << detail_path.string() << "\n" << summary_path.string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// bundle

struct BundleArgs {
  std::string graph_file;
  std::string source, destination;
  bool with_paths = false;
  std::uint64_t cap = 1000000;
  std::string out_file;
  CommonOpts common;
};

int cmd_bundle(const BundleArgs& args) {
  const LoadedGraph loaded = load_graph(args.graph_file);
  const NodeId source = resolve_node(loaded, args.source);
  const NodeId destination = resolve_node(loaded, args.destination);

  const auto hierarchy = bfs_hierarchy(loaded.graph, source);
  const LeveledDag dag = leveled_dag(loaded.graph, hierarchy);
  const auto bundle = extract_bundle(dag, destination);
  if (!bundle)
    throw domain_result("no bundle: node " + args.destination +
                        " is unreachable from " + args.source);

  const auto T = transition_matrix(*bundle);
  const auto flow = equilibrium_flow(*bundle, T);
  const auto s = summarize(*bundle, flow);

  json dump;
  dump["source"] = node_ref(loaded, source);
  dump["destination"] = node_ref(loaded, destination);
  dump["L"] = bundle->length;
  for (const auto& level : bundle->level_nodes) {
    json nodes = json::array();
    for (NodeId v : level) nodes.push_back(node_ref(loaded, v));
    dump["levels"].push_back(std::move(nodes));
  }
  for (int h = 1; h <= bundle->length; ++h) {
    json links = json::array();
    for (const auto& [u, v] : bundle->links_between(h))
      links.push_back({node_ref(loaded, u), node_ref(loaded, v)});
    dump["links"].push_back(std::move(links));
  }
  dump["transition"] = T.prob;
  dump["node_flow"] = flow.node_flow;
  dump["link_flow"] = flow.link_flow;
  dump["widths"] = flow.widths;
  dump["summary"] = {{"path_count", s.path_count},
                     {"mean_width", s.mean_width},
                     {"std_width", s.std_width},
                     {"min_width", s.min_width},
                     {"max_width", s.max_width}};
  if (args.with_paths) {
    const auto paths = enumerate_paths(*bundle, args.cap);
    for (const auto& path : paths) {
      json row = json::array();
      for (NodeId v : path) row.push_back(node_ref(loaded, v));
      dump["paths"].push_back(std::move(row));
    }
  }

  if (args.out_file.empty()) {
    std::cout << dump.dump(2) << "\n";
  } else {
    std::ofstream out(args.out_file, std::ios::binary);
    if (!out) throw schema_error("cannot write " + args.out_file);
    out << dump.dump(2) << "\n";
    json meta;
    meta["command"] = "bundle";
    meta["graph"] = args.graph_file;
    meta["source"] = node_ref(loaded, source);
    meta["destination"] = node_ref(loaded, destination);
    if (loaded.labeled) meta["labels"] = loaded.labels;
    write_metadata(args.out_file, meta);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sbn / signature

struct SbnArgs {
  std::string graph_file;
  int L = 3;
  std::string stat = "mean";
  CommonOpts common;
};

int cmd_sbn(const SbnArgs& args) {
  const LoadedGraph loaded = load_graph(args.graph_file);
  const SbnGraph sbn = build_sbn(loaded.graph, args.L,
                                 parse_width_stat(args.stat),
                                 args.common.threads);

  const std::string stem =
      "sbn_L" + std::to_string(args.L) + "_" + args.stat;
  std::vector<fs::path> written;
  if (args.common.wants("graphml", true)) {
    const auto path = args.common.out_path(stem + ".graphml");
    write_sbn_graphml(sbn, path);
    written.push_back(path);
  }
  if (args.common.wants("csv", true)) {
    const auto path = args.common.out_path(stem + ".csv");
    write_sbn_csv(sbn, path);
    written.push_back(path);
  }
  if (args.common.wants("svg", false)) {
    const auto path = args.common.out_path(stem + ".svg");
    write_sbn_svg(sbn, path);
    written.push_back(path);
  }
  if (written.empty())
    throw input_error("sbn supports --format graphml, csv, svg");

  json meta;
  meta["command"] = "sbn";
  meta["graph"] = args.graph_file;
  meta["L"] = args.L;
  meta["stat"] = args.stat;
  meta["edges"] = sbn.weights.size();
  if (loaded.labeled) meta["labels"] = loaded.labels;
  write_metadata(written.front(), meta);
  for (const auto& path : written) std::cout << path.string() << "\n";
  return 0;
}

struct SignatureArgs {
  std::string graph_file;
  int lmin = 2, lmax = 10;
  std::string stat = "mean";
  CommonOpts common;
};

int cmd_signature(const SignatureArgs& args) {
  const LoadedGraph loaded = load_graph(args.graph_file);
  if (args.lmin < 1 || args.lmax < args.lmin)
    throw input_error("invalid L range");
  std::vector<int> L_list;
  for (int L = args.lmin; L <= args.lmax; ++L) L_list.push_back(L);

  const auto rows = signature(loaded.graph, L_list,
                              parse_width_stat(args.stat),
                              args.common.threads);
  const auto path = args.common.out_path("signature_" + args.stat + ".csv");
  write_signature_csv(rows, path);

  json meta;
  meta["command"] = "signature";
  meta["graph"] = args.graph_file;
  meta["lmin"] = args.lmin;
  meta["lmax"] = args.lmax;
  meta["stat"] = args.stat;
  if (loaded.labeled) meta["labels"] = loaded.labels;
  write_metadata(path, meta);
  std::cout << path.string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// morphology

struct MorphologyArgs {
  std::string graph_file;
  std::string source;
  std::vector<int> L_list;
  CommonOpts common;
};

int cmd_morphology(const MorphologyArgs& args) {
  const LoadedGraph loaded = load_graph(args.graph_file);
  const NodeId source = args.source.empty()
                            ? centroid_node(loaded.graph)
                            : resolve_node(loaded, args.source);
  const auto per_L = bundle_morphology(loaded.graph, source, args.L_list);

  json doc;
  doc["source"] = node_ref(loaded, source);
  doc["per_L"] = json::array();
  for (std::size_t k = 0; k < args.L_list.size(); ++k) {
    json group;
    group["L"] = args.L_list[k];
    group["bundles"] = json::array();
    for (const auto& bundle : per_L[k]) {
      const auto flow = equilibrium_flow(bundle, transition_matrix(bundle));
      json item;
      item["destination"] = node_ref(loaded, bundle.destination);
      for (const auto& level : bundle.level_nodes)
        item["level_sizes"].push_back(level.size());
      for (const auto& links : bundle.level_links)
        item["link_counts"].push_back(links.size());
      item["widths"] = flow.widths;
      item["mean_width"] = width_stat(flow.widths, WidthStat::mean);
      group["bundles"].push_back(std::move(item));
    }
    doc["per_L"].push_back(std::move(group));
  }

  const auto path = args.common.out_path("morphology.json");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw schema_error("cannot write " + path.string());
  out << doc.dump(2) << "\n";

  json meta;
  meta["command"] = "morphology";
  meta["graph"] = args.graph_file;
  meta["source"] = node_ref(loaded, source);
  meta["L"] = args.L_list;
  if (loaded.labeled) meta["labels"] = loaded.labels;
  write_metadata(path, meta);
  std::cout << path.string() << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Simple-bundle analysis of undirected networks"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand(
      "generate", "Generate a model network (JSON graph schema)");
  generate_cmd
      ->add_option("family", gen.family,
                   "lattice | perturbed-delaunay | ws")
      ->required()
      ->check(CLI::IsMember({"lattice", "perturbed-delaunay", "ws"}));
  generate_cmd->add_option("--rows", gen.rows, "Lattice rows")->required();
  generate_cmd->add_option("--cols", gen.cols, "Lattice columns")->required();
  generate_cmd->add_flag("--periodic", gen.periodic,
                         "Wrap both lattice directions (torus)");
  generate_cmd->add_option("--delta", gen.delta,
                           "Perturbation half-range (perturbed-delaunay)");
  generate_cmd->add_option("--p", gen.p, "Rewiring probability (ws)");
  generate_cmd->add_option("--seed", gen.seed, "RNG seed")
      ->capture_default_str();
  generate_cmd->add_option("--out", gen.out_file,
                           "Output file (default: derived name in --out-dir)");
  add_common(generate_cmd, gen.common);

  HistArgs hist;
  auto* hist_cmd = app.add_subcommand(
      "hist", "Per-destination path counts and effective widths");
  hist_cmd->add_option("--graph", hist.graph_file, "Input graph file")
      ->required();
  hist_cmd->add_option("--source", hist.source,
                       "Source node (default: nearest the coordinate centroid)");
  hist_cmd->add_option("--lmin", hist.lmin, "Smallest L")->capture_default_str();
  hist_cmd->add_option("--lmax", hist.lmax, "Largest L")->capture_default_str();
  add_common(hist_cmd, hist.common);

  BundleArgs bundle;
  auto* bundle_cmd = app.add_subcommand(
      "bundle", "Dump one simple bundle with flow and widths");
  bundle_cmd->add_option("--graph", bundle.graph_file, "Input graph file")
      ->required();
  bundle_cmd->add_option("--source", bundle.source, "Source node")->required();
  bundle_cmd->add_option("--destination", bundle.destination,
                         "Destination node")
      ->required();
  bundle_cmd->add_flag("--paths", bundle.with_paths,
                       "Include the explicit path list (under --cap)");
  bundle_cmd->add_option("--cap", bundle.cap, "Path enumeration cap")
      ->capture_default_str();
  bundle_cmd->add_option("--out", bundle.out_file,
                         "Write the dump here instead of stdout");
  add_common(bundle_cmd, bundle.common);

  SbnArgs sbn;
  auto* sbn_cmd =
      app.add_subcommand("sbn", "Build the simple bundles network for one L");
  sbn_cmd->add_option("--graph", sbn.graph_file, "Input graph file")
      ->required();
  sbn_cmd->add_option("--L", sbn.L, "Bundle length")->required();
  sbn_cmd->add_option("--stat", sbn.stat, "Width statistic: mean|min|std|max")
      ->capture_default_str();
  add_common(sbn_cmd, sbn.common);

  SignatureArgs sig;
  auto* sig_cmd = app.add_subcommand(
      "signature", "SBN weight mean and std across a range of L");
  sig_cmd->add_option("--graph", sig.graph_file, "Input graph file")
      ->required();
  sig_cmd->add_option("--lmin", sig.lmin, "Smallest L")->capture_default_str();
  sig_cmd->add_option("--lmax", sig.lmax, "Largest L")->capture_default_str();
  sig_cmd->add_option("--stat", sig.stat, "Width statistic: mean|min|std|max")
      ->capture_default_str();
  add_common(sig_cmd, sig.common);

  MorphologyArgs morph;
  auto* morph_cmd = app.add_subcommand(
      "morphology", "All bundles from one source, grouped by L");
  morph_cmd->add_option("--graph", morph.graph_file, "Input graph file")
      ->required();
  morph_cmd->add_option("--source", morph.source,
                        "Source node (default: nearest the coordinate centroid)");
  morph_cmd->add_option("--L", morph.L_list, "Bundle lengths (may repeat)")
      ->required();
  add_common(morph_cmd, morph.common);

  generate_cmd->callback([&]() { cmd_generate(gen); });
  hist_cmd->callback([&]() { cmd_hist(hist); });
  bundle_cmd->callback([&]() { cmd_bundle(bundle); });
  sbn_cmd->callback([&]() { cmd_sbn(sbn); });
  sig_cmd->callback([&]() { cmd_signature(sig); });
  morph_cmd->callback([&]() { cmd_morphology(morph); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const domain_result& e) {
    std::cout << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("sbundle");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace bundles
