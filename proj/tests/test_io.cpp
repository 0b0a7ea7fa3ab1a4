#include <unistd.h>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "bundles/export.hpp"
#include "bundles/generators.hpp"
#include "bundles/graph_io.hpp"
#include "bundles/sbn.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bundles;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() /
                       ("sbundle_io_test_" + std::to_string(::getpid()) +
                        "_" + std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("graph JSON round-trips bit-exactly") {
  const auto dir = temp_dir();
  const Graph g = lattice(7, 7);
  save_graph(g, dir / "g.json");
  CHECK(load_graph_json(dir / "g.json") == g);

  // Perturbed coordinates exercise full double round-tripping.
  const Graph p = delaunay(perturb_coords(g.coords(), 1e-10, 7));
  save_graph(p, dir / "p.json");
  const Graph back = load_graph_json(dir / "p.json");
  CHECK(back == p);
  CHECK(back.coords() == p.coords());

  // Saving twice produces identical bytes.
  save_graph(p, dir / "p2.json");
  CHECK(read_text(dir / "p.json") == read_text(dir / "p2.json"));
}

TEST_CASE("graph JSON schema errors name the offending record") {
  const auto dir = temp_dir();
  const auto expect_schema_error = [&](const std::string& text,
                                       const std::string& needle) {
    write_text(dir / "bad.json", text);
    try {
      load_graph_json(dir / "bad.json");
      FAIL("expected schema_error for: " << text);
    } catch (const schema_error& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_schema_error(R"({"n": 4, "edges": [[3,3]]})", "[3,3]");
  expect_schema_error(R"({"n": 4, "edges": [[0,1],[0,1]]})", "twice");
  expect_schema_error(R"({"n": 4, "edges": [[1,0]]})", "u < v");
  expect_schema_error(R"({"n": 4, "edges": [[0,9]]})", "[0,9]");
  expect_schema_error(R"({"n": 2, "edges": [], "coords": [[0,0]]})", "length");
  expect_schema_error("not json at all", "JSON");
  expect_schema_error(R"({"edges": []})", "\"n\"");
}

TEST_CASE("edge-list loading maps labels to dense ids") {
  const auto dir = temp_dir();
  write_text(dir / "fig.txt", fixtures::didactic_edge_list_text());
  const LoadedGraph loaded = load_graph(dir / "fig.txt");
  CHECK(loaded.labeled);
  CHECK(loaded.labels == fixtures::kDidacticLabels);
  CHECK(loaded.graph == fixtures::didactic_bundle_graph());
  CHECK(loaded.label_of(5) == "10");

  write_text(dir / "selfloop.txt", "a b\nc c\n");
  CHECK_THROWS_AS(load_graph(dir / "selfloop.txt"), schema_error);
  write_text(dir / "dup.txt", "a b\nb a\n");
  CHECK_THROWS_AS(load_graph(dir / "dup.txt"), schema_error);
  write_text(dir / "arity.txt", "a b c\n");
  CHECK_THROWS_AS(load_graph(dir / "arity.txt"), schema_error);

  // JSON content is detected regardless of extension.
  save_graph(lattice(3, 3), dir / "grid.txt");
  const LoadedGraph json_loaded = load_graph(dir / "grid.txt");
  CHECK(!json_loaded.labeled);
  CHECK(json_loaded.graph == lattice(3, 3));
}

TEST_CASE("format_double round-trips doubles") {
  for (double x : {1.0 / 3.0, 1e-10, 2.1943975849, 0.1, 7.0000000001,
                   1.7976931348623157e308}) {
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
  }
}

TEST_CASE("GraphML round-trips the SBN") {
  const auto dir = temp_dir();
  const SbnGraph sbn =
      build_sbn(delaunay(perturb_coords(lattice(5, 5).coords(), 1e-10, 13)),
                3, WidthStat::mean);
  write_sbn_graphml(sbn, dir / "sbn.graphml");
  const SbnGraph back = read_sbn_graphml(dir / "sbn.graphml");
  CHECK(back.L == sbn.L);
  CHECK(back.stat == sbn.stat);
  CHECK(back.node_count == sbn.node_count);
  CHECK(back.weights == sbn.weights);  // bit-exact via %.17g
  REQUIRE(back.coords.has_value());
  CHECK(*back.coords == *sbn.coords);
}

TEST_CASE("CSV round-trips the SBN weight map") {
  const auto dir = temp_dir();
  const SbnGraph sbn = build_sbn(lattice(6, 6), 4, WidthStat::min);
  write_sbn_csv(sbn, dir / "sbn.csv");
  const SbnGraph back = read_sbn_csv(dir / "sbn.csv");
  CHECK(back.weights == sbn.weights);

  write_text(dir / "bad.csv", "x,y,z\n");
  CHECK_THROWS_AS(read_sbn_csv(dir / "bad.csv"), schema_error);
}

TEST_CASE("signature CSV has one row per L, blanks for empty levels") {
  const auto dir = temp_dir();
  const Graph g = lattice(7, 7);
  std::vector<int> L_list;
  for (int L = 2; L <= 10; ++L) L_list.push_back(L);
  const auto rows = signature(g, L_list, WidthStat::mean);
  write_signature_csv(rows, dir / "sig.csv");

  std::ifstream in(dir / "sig.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "L,edge_count,mean,std");
  int data_rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++data_rows;
  CHECK(data_rows == 9);

  const SignatureRow empty{20, 0, std::nullopt, std::nullopt};
  write_signature_csv(std::vector<SignatureRow>{empty}, dir / "empty.csv");
  CHECK(read_text(dir / "empty.csv") == "L,edge_count,mean,std\n20,0,,\n");
}

TEST_CASE("SVG exports are well-formed enough to ship") {
  const auto dir = temp_dir();
  const SbnGraph sbn = build_sbn(lattice(5, 5), 3, WidthStat::mean);
  write_sbn_svg(sbn, dir / "sbn.svg");
  const std::string svg = read_text(dir / "sbn.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  const std::vector<double> values{1.0, 1.0, 2.0, 2.2, 3.5};
  write_histogram_svg(values, 5, "widths", dir / "hist.svg");
  CHECK(read_text(dir / "hist.svg").find("<rect") != std::string::npos);

  SbnGraph no_coords = sbn;
  no_coords.coords.reset();
  CHECK_THROWS_AS(write_sbn_svg(no_coords, dir / "x.svg"), input_error);
}
