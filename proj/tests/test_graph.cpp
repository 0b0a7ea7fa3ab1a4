#include <algorithm>
#include <cstdlib>

#include "bundles/graph.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bundles;

TEST_CASE("graph construction validates and canonicalizes") {
  Graph g(4, {{2, 1}, {0, 1}, {3, 2}});
  CHECK(g.node_count() == 4);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 3));

  CHECK_THROWS_AS(Graph(3, {{1, 1}}), input_error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), input_error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), input_error);
  CHECK_THROWS_AS(Graph(2, {{0, 1}}, Coords{{0.0, 0.0}}), input_error);
}

TEST_CASE("bfs_hierarchy reproduces the didactic bundle frontiers") {
  // Labels {1,4,5,7,8,10} are ids {0,1,2,3,4,5}; expected frontiers
  // [[1],[4,5],[7,8],[10]].
  const Graph g = fixtures::didactic_bundle_graph();
  const auto h = bfs_hierarchy(g, 0);
  REQUIRE(h.max_level() == 3);
  CHECK(h.frontiers()[0] == std::vector<NodeId>{0});
  CHECK(h.frontiers()[1] == std::vector<NodeId>{1, 2});
  CHECK(h.frontiers()[2] == std::vector<NodeId>{3, 4});
  CHECK(h.frontiers()[3] == std::vector<NodeId>{5});
  CHECK(h.level_of(4) == 2);
}

TEST_CASE("bfs_hierarchy on a path graph") {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto h = bfs_hierarchy(g, 0);
  REQUIRE(h.max_level() == 3);
  for (int k = 0; k < 4; ++k)
    CHECK(h.frontiers()[static_cast<std::size_t>(k)] ==
          std::vector<NodeId>{k});
}

TEST_CASE("bfs_hierarchy rejects invalid sources") {
  const Graph g(3, {{0, 1}});
  CHECK_THROWS_AS(bfs_hierarchy(g, -1), input_error);
  CHECK_THROWS_AS(bfs_hierarchy(g, 3), input_error);
}

TEST_CASE("unreachable nodes carry no level") {
  const Graph g(4, {{0, 1}, {2, 3}});
  const auto h = bfs_hierarchy(g, 0);
  CHECK(h.level_of(1) == 1);
  CHECK(!h.level_of(2).has_value());
  CHECK(!h.level_of(3).has_value());
  CHECK(h.reachable_count() == 2);
}

TEST_CASE("bfs levels equal brute-force all-pairs distances") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = oracles::random_graph(20, 30, seed);
    const auto dist = oracles::floyd_warshall(g);
    for (NodeId s = 0; s < g.node_count(); s += 5) {
      const auto h = bfs_hierarchy(g, s);
      for (NodeId v = 0; v < g.node_count(); ++v) {
        const int expected = dist[static_cast<std::size_t>(s)]
                                 [static_cast<std::size_t>(v)];
        if (expected == oracles::kUnreachable) {
          CHECK(!h.level_of(v).has_value());
        } else {
          REQUIRE(h.level_of(v).has_value());
          CHECK(*h.level_of(v) == expected);
        }
      }
    }
  }
}

TEST_CASE("hierarchy invariants hold on random graphs") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = oracles::random_graph(24, 40, seed);
    const auto h = bfs_hierarchy(g, 0);

    std::size_t total = 0;
    for (std::size_t level = 0; level < h.frontiers().size(); ++level) {
      const auto& frontier = h.frontiers()[level];
      CHECK(std::is_sorted(frontier.begin(), frontier.end()));
      total += frontier.size();
      for (NodeId v : frontier)
        CHECK(h.level_of(v) == static_cast<int>(level));
    }
    CHECK(total == h.reachable_count());

    // Adjacent reachable nodes differ by at most one level.
    for (const auto& [u, v] : g.edges()) {
      const auto hu = h.level_of(u);
      const auto hv = h.level_of(v);
      if (hu && hv) CHECK(std::abs(*hu - *hv) <= 1);
    }

    // Every node at level h >= 1 has a neighbor one level up.
    for (std::size_t level = 1; level < h.frontiers().size(); ++level) {
      for (NodeId v : h.frontiers()[level]) {
        bool has_parent = false;
        for (NodeId u : g.neighbors(v))
          if (h.level_of(u) == static_cast<int>(level) - 1) has_parent = true;
        CHECK(has_parent);
      }
    }

    // Determinism.
    const auto again = bfs_hierarchy(g, 0);
    CHECK(again.frontiers() == h.frontiers());
  }
}
