#include "bundles/generators.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <string>

#include "bundles/rng.hpp"

namespace bundles {

Graph lattice(int rows, int cols, bool periodic) {
  if (rows < 2 || cols < 2)
    throw input_error("lattice needs rows, cols >= 2 (got " +
                      std::to_string(rows) + "x" + std::to_string(cols) + ")");
  if (periodic && (rows < 3 || cols < 3))
    throw input_error(
        "periodic lattice needs rows, cols >= 3 to stay a simple graph");

  const auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<Edge> edges;
  Coords coords;
  coords.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      coords.push_back({static_cast<double>(c), static_cast<double>(r)});
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
      if (periodic && c + 1 == cols) edges.emplace_back(id(r, 0), id(r, c));
      if (periodic && r + 1 == rows) edges.emplace_back(id(0, c), id(r, c));
    }
  }
  return Graph(rows * cols, std::move(edges), std::move(coords));
}

Coords perturb_coords(const Coords& coords, double delta, std::uint64_t seed) {
  if (delta < 0) throw input_error("perturbation delta must be nonnegative");
  Coords out = coords;
  if (delta == 0.0) return out;
  Rng rng(seed);
  for (auto& point : out) {
    point[0] += rng.uniform(-delta, delta);
    point[1] += rng.uniform(-delta, delta);
  }
  return out;
}

Graph ws_rewire(const Graph& graph, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0)
    throw input_error("rewiring probability must lie in [0, 1]");

  const int n = graph.node_count();
  std::vector<std::set<NodeId>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : graph.edges()) {
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }

  Rng rng(seed);
  for (const auto& [u, v] : graph.edges()) {  // already ascending (u, v)
    if (!rng.bernoulli(p)) continue;
    std::vector<NodeId> candidates;
    candidates.reserve(static_cast<std::size_t>(n));
    for (NodeId w = 0; w < n; ++w) {
      if (w != u && !adj[static_cast<std::size_t>(u)].contains(w))
        candidates.push_back(w);
    }
    if (candidates.empty()) {
      std::clog << "ws_rewire: node " << u
                << " is adjacent to every other node; edge (" << u << ", "
                << v << ") left in place\n";
      continue;
    }
    const NodeId w = candidates[rng.below(candidates.size())];
    adj[static_cast<std::size_t>(u)].erase(v);
    adj[static_cast<std::size_t>(v)].erase(u);
    adj[static_cast<std::size_t>(u)].insert(w);
    adj[static_cast<std::size_t>(w)].insert(u);
  }

  std::vector<Edge> edges;
  edges.reserve(graph.edge_count());
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : adj[static_cast<std::size_t>(u)]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  std::optional<Coords> coords;
  if (graph.has_coords()) coords = graph.coords();
  return Graph(n, std::move(edges), std::move(coords));
}

Graph generate(const GeneratorConfig& config) {
  if (config.delta != 0.0 && config.rewire_p != 0.0)
    throw input_error(
        "geometric perturbation and topological rewiring are separate "
        "experiments; pass only one of delta, rewire_p");

  if (config.delta != 0.0) {
    if (config.periodic)
      throw input_error("perturbed Delaunay generation is non-periodic");
    const Graph base = lattice(config.rows, config.cols, false);
    return delaunay(perturb_coords(base.coords(), config.delta, config.seed));
  }
  Graph base = lattice(config.rows, config.cols, config.periodic);
  if (config.rewire_p != 0.0)
    return ws_rewire(base, config.rewire_p, config.seed);
  return base;
}

}  // namespace bundles
