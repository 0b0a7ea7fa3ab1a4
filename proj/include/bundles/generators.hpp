#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bundles/graph.hpp"

namespace bundles {

/// Orthogonal lattice with rows*cols nodes. Node (r, c) has id r*cols + c and
/// coordinates (x=c, y=r). Periodic lattices wrap both directions (torus) and
/// need rows, cols >= 3 to stay simple graphs.
Graph lattice(int rows, int cols, bool periodic = false);

/// Each coordinate component independently offset by a uniform draw in
/// [-delta, delta). Identical seed, identical output. Draw order: node 0 x,
/// node 0 y, node 1 x, ...
Coords perturb_coords(const Coords& coords, double delta, std::uint64_t seed);

/// A Delaunay triangulation: triangles as CCW index triples plus the
/// canonical edge set.
struct Triangulation {
  std::vector<std::array<NodeId, 3>> triangles;
  std::vector<Edge> edges;  // ascending (u, v), u < v
};

/// Delaunay triangulation of the point set via incremental insertion
/// (Bowyer-Watson with a symbolic vertex at infinity) on exact predicates.
/// Every triangle's circumcircle is empty of other input points.
///
/// Throws degeneracy_error on duplicate points, all-collinear input, exactly
/// cocircular quadruples, or a point exactly on a hull edge; the caller is
/// expected to perturb the coordinates. The perfect (delta = 0) lattice is
/// maximally cocircular and is rejected this way.
Triangulation triangulate(const Coords& points);

/// Graph of the Delaunay triangulation edges, with the input coordinates
/// attached.
Graph delaunay(const Coords& points);

/// Watts-Strogatz style rewiring. Edges are visited in ascending (u, v)
/// order; each is independently selected with probability p; a selected edge
/// (u, v) keeps its lexicographically smaller endpoint u and replaces v by a
/// node drawn uniformly from the nodes that are neither u nor current
/// neighbors of u. Edge count and simplicity are preserved. When u is
/// adjacent to every other node the edge is left in place (a note goes to
/// std::clog).
Graph ws_rewire(const Graph& graph, double p, std::uint64_t seed);

/// One-stop configuration for the model families used in the experiments.
/// delta and rewire_p must not both be nonzero in a single call.
struct GeneratorConfig {
  int rows = 0;
  int cols = 0;
  bool periodic = false;
  double delta = 0.0;     // geometric perturbation half-range
  double rewire_p = 0.0;  // Watts-Strogatz rewiring probability
  std::uint64_t seed = 0;
};

/// lattice -> (perturb + delaunay | ws_rewire) per the config.
Graph generate(const GeneratorConfig& config);

}  // namespace bundles
