#include <unistd.h>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "bundles/cli.hpp"
#include "bundles/export.hpp"
#include "bundles/generators.hpp"
#include "bundles/graph_io.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

using namespace bundles;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path temp_dir() {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() /
                       ("sbundle_cli_test_" + std::to_string(::getpid()) +
                        "_" + std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("generate writes the graph and its metadata sidecar") {
  const auto dir = temp_dir();
  const auto out = (dir / "g.json").string();
  CHECK(run_cli({"generate", "lattice", "--rows", "15", "--cols", "15",
                 "--out", out}) == 0);
  const Graph g = load_graph_json(out);
  CHECK(g.node_count() == 225);
  CHECK(g.edge_count() == 420);

  const json meta = json::parse(read_text(out + ".meta.json"));
  CHECK(meta["command"] == "generate");
  CHECK(meta["seed"] == 0);

  CHECK(run_cli({"generate", "lattice", "--rows", "7", "--cols", "7",
                 "--periodic", "--out", (dir / "torus.json").string()}) == 0);
  CHECK(load_graph_json(dir / "torus.json").edge_count() == 98);
}

TEST_CASE("generate perturbed-delaunay is bit-identical across reruns") {
  const auto dir = temp_dir();
  const auto a = (dir / "a.json").string();
  const auto b = (dir / "b.json").string();
  const std::vector<std::string> base{
      "generate", "perturbed-delaunay", "--rows", "15", "--cols", "15",
      "--delta", "1e-10", "--seed", "7"};
  auto args_a = base;
  args_a.insert(args_a.end(), {"--out", a});
  auto args_b = base;
  args_b.insert(args_b.end(), {"--out", b});
  CHECK(run_cli(args_a) == 0);
  CHECK(run_cli(args_b) == 0);
  CHECK(read_text(a) == read_text(b));
}

TEST_CASE("generate ws rewires the lattice deterministically") {
  const auto dir = temp_dir();
  const auto out = (dir / "ws.json").string();
  CHECK(run_cli({"generate", "ws", "--rows", "7", "--cols", "7", "--p",
                 "0.05", "--seed", "3", "--out", out}) == 0);
  CHECK(load_graph_json(out).edge_count() == 84);
}

TEST_CASE("bundle dump reproduces the worked example through labels") {
  const auto dir = temp_dir();
  std::ofstream(dir / "fig.txt") << fixtures::didactic_edge_list_text();
  const auto out = (dir / "bundle.json").string();
  CHECK(run_cli({"bundle", "--graph", (dir / "fig.txt").string(), "--source",
                 "1", "--destination", "10", "--paths", "--out", out}) == 0);

  const json dump = json::parse(read_text(out));
  CHECK(dump["source"] == "1");
  CHECK(dump["destination"] == "10");
  CHECK(dump["L"] == 3);
  CHECK(dump["summary"]["path_count"] == 3);
  CHECK(std::abs(dump["widths"][0].get<double>() - 2.0) < 1e-3);
  CHECK(std::abs(dump["widths"][1].get<double>() - 2.8284) < 1e-3);
  CHECK(std::abs(dump["widths"][2].get<double>() - 1.7548) < 1e-3);
  CHECK(std::abs(dump["summary"]["mean_width"].get<double>() - 2.1944) < 1e-3);
  REQUIRE(dump["paths"].size() == 3);
  CHECK(dump["paths"][0] == json::array({"1", "4", "7", "10"}));
}

TEST_CASE("bundle distinguishes domain results from usage errors") {
  const auto dir = temp_dir();
  save_graph(Graph(4, {{0, 1}, {2, 3}}), dir / "split.json");
  // Unreachable destination: domain result, exit 1.
  CHECK(run_cli({"bundle", "--graph", (dir / "split.json").string(),
                 "--source", "0", "--destination", "2"}) == 1);
  // Unknown node: usage error, exit 2.
  CHECK(run_cli({"bundle", "--graph", (dir / "split.json").string(),
                 "--source", "0", "--destination", "9"}) == 2);
  // Missing file: schema error, exit 2.
  CHECK(run_cli({"bundle", "--graph", (dir / "nope.json").string(),
                 "--source", "0", "--destination", "1"}) == 2);
  // Bad subcommand usage: exit 2.
  CHECK(run_cli({"bundle"}) == 2);
  CHECK(run_cli({"frobnicate"}) == 2);
}

TEST_CASE("chain graph end-to-end bundle has unit widths") {
  const auto dir = temp_dir();
  save_graph(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), dir / "chain.json");
  const auto out = (dir / "dump.json").string();
  CHECK(run_cli({"bundle", "--graph", (dir / "chain.json").string(),
                 "--source", "0", "--destination", "4", "--out", out}) == 0);
  const json dump = json::parse(read_text(out));
  for (const auto& e : dump["widths"])
    CHECK(e.get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sbn exports GraphML and CSV with the reference weights") {
  const auto dir = temp_dir();
  save_graph(lattice(7, 7), dir / "g.json");
  CHECK(run_cli({"sbn", "--graph", (dir / "g.json").string(), "--L", "3",
                 "--stat", "mean", "--out-dir", dir.string()}) == 0);
  const SbnGraph sbn = read_sbn_graphml(dir / "sbn_L3_mean.graphml");
  std::set<double> values;
  for (const auto& [a, b, w] : sbn.weights)
    values.insert(std::round(w * 1e3) / 1e3);
  CHECK(values == std::set<double>{1.0, 2.194});

  const SbnGraph csv = read_sbn_csv(dir / "sbn_L3_mean.csv");
  CHECK(csv.weights == sbn.weights);

  // Unknown stat: usage error.
  CHECK(run_cli({"sbn", "--graph", (dir / "g.json").string(), "--L", "3",
                 "--stat", "bogus", "--out-dir", dir.string()}) == 2);
}

TEST_CASE("sbn at L = 1 mirrors the base edge set") {
  const auto dir = temp_dir();
  const Graph g = lattice(7, 7);
  save_graph(g, dir / "g.json");
  CHECK(run_cli({"sbn", "--graph", (dir / "g.json").string(), "--L", "1",
                 "--stat", "mean", "--out-dir", dir.string(), "--format",
                 "csv"}) == 0);
  const SbnGraph sbn = read_sbn_csv(dir / "sbn_L1_mean.csv");
  std::vector<Edge> edges;
  for (const auto& [a, b, w] : sbn.weights) {
    edges.emplace_back(a, b);
    CHECK(w == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(edges == g.edges());
}

TEST_CASE("signature emits one CSV row per L") {
  const auto dir = temp_dir();
  save_graph(lattice(7, 7), dir / "g.json");
  CHECK(run_cli({"signature", "--graph", (dir / "g.json").string(), "--lmin",
                 "2", "--lmax", "10", "--stat", "mean", "--out-dir",
                 dir.string()}) == 0);
  std::ifstream in(dir / "signature_mean.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "L,edge_count,mean,std");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 9);
}

TEST_CASE("hist defaults to the centroid source and aggregates per L") {
  const auto dir = temp_dir();
  save_graph(lattice(15, 15), dir / "g.json");
  CHECK(run_cli({"hist", "--graph", (dir / "g.json").string(), "--lmin", "2",
                 "--lmax", "7", "--out-dir", dir.string()}) == 0);

  const json meta = json::parse(read_text((dir / "hist_detail.csv").string() +
                                          ".meta.json"));
  CHECK(meta["source"] == 112);  // the 15x15 center

  std::ifstream detail(dir / "hist_detail.csv");
  std::string line;
  std::getline(detail, line);
  CHECK(line == "L,destination,path_count,mu_E,min_E");
  int max_l7_count = 0;
  while (std::getline(detail, line)) {
    int L = 0, dest = 0;
    long long paths = 0;
    double mu = 0, mn = 0;
    REQUIRE(std::sscanf(line.c_str(), "%d,%d,%lld,%lf,%lf", &L, &dest, &paths,
                        &mu, &mn) == 5);
    if (L == 2) {
      CHECK((paths == 1 || paths == 2));
      CHECK(mu <= 2.0 + 1e-9);
    }
    if (L == 7) max_l7_count = std::max<long long>(max_l7_count, paths);
  }
  CHECK(max_l7_count == 35);  // C(7,3)

  std::ifstream summary(dir / "hist_summary.csv");
  std::getline(summary, line);
  int rows = 0;
  while (std::getline(summary, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 6);  // L = 2..7

  // Reruns are bit-identical.
  const std::string before = read_text(dir / "hist_detail.csv");
  CHECK(run_cli({"hist", "--graph", (dir / "g.json").string(), "--lmin", "2",
                 "--lmax", "7", "--out-dir", dir.string()}) == 0);
  CHECK(read_text(dir / "hist_detail.csv") == before);
}

TEST_CASE("hist requires a resolvable source") {
  const auto dir = temp_dir();
  std::ofstream(dir / "fig.txt") << fixtures::didactic_edge_list_text();
  // No coordinates and no --source: input error.
  CHECK(run_cli({"hist", "--graph", (dir / "fig.txt").string(), "--out-dir",
                 dir.string()}) == 2);
  CHECK(run_cli({"hist", "--graph", (dir / "fig.txt").string(), "--source",
                 "1", "--lmin", "1", "--lmax", "3", "--out-dir",
                 dir.string()}) == 0);
}

TEST_CASE("morphology dumps per-L bundle shapes") {
  const auto dir = temp_dir();
  // Seed 10: a realization whose center eccentricity reaches 5.
  save_graph(delaunay(perturb_coords(lattice(7, 7).coords(), 1e-12, 10)),
             dir / "g.json");
  CHECK(run_cli({"morphology", "--graph", (dir / "g.json").string(), "--L",
                 "3", "--L", "4", "--L", "5", "--out-dir",
                 dir.string()}) == 0);
  const json doc = json::parse(read_text(dir / "morphology.json"));
  REQUIRE(doc["per_L"].size() == 3);
  for (const auto& group : doc["per_L"]) {
    REQUIRE(!group["bundles"].empty());
    const auto& first = group["bundles"][0];
    CHECK(first["level_sizes"].size() == group["L"].get<std::size_t>() + 1);
    CHECK(first["link_counts"].size() == group["L"].get<std::size_t>());
  }
}

TEST_CASE("sbn svg output draws the network") {
  const auto dir = temp_dir();
  save_graph(lattice(5, 5), dir / "g.json");
  CHECK(run_cli({"sbn", "--graph", (dir / "g.json").string(), "--L", "2",
                 "--stat", "mean", "--out-dir", dir.string(), "--format",
                 "svg"}) == 0);
  CHECK(read_text(dir / "sbn_L2_mean.svg").find("<line") !=
        std::string::npos);
}
