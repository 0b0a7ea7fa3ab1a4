#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bundles/errors.hpp"

namespace bundles {

using NodeId = int;

/// Canonical undirected edge, stored with first < second.
using Edge = std::pair<NodeId, NodeId>;

/// Per-node 2D positions, indexed by node id.
using Coords = std::vector<std::array<double, 2>>;

/// Immutable undirected simple graph with contiguous node ids 0..n-1 and
/// optional 2D node positions. Construction validates and canonicalizes the
/// edge set (u < v, sorted); instances are safe to share across threads.
class Graph {
 public:
  /// Throws input_error on self-loops, duplicate edges, or ids outside
  /// 0..node_count-1; coords, when present, must have node_count entries.
  Graph(int node_count, std::vector<Edge> edges,
        std::optional<Coords> coords = std::nullopt);

  int node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges in ascending (u, v) order with u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbors of v in ascending id order.
  std::span<const NodeId> neighbors(NodeId v) const;

  int degree(NodeId v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(NodeId u, NodeId v) const;

  bool has_coords() const noexcept { return coords_.has_value(); }
  const Coords& coords() const;

  bool operator==(const Graph& other) const;

 private:
  void check_node(NodeId v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adj_;
  std::optional<Coords> coords_;
};

/// BFS level structure rooted at a source node. Unreachable nodes carry no
/// level at all, so "no bundle exists" checks stay explicit.
class HierarchyDecomposition {
 public:
  HierarchyDecomposition(NodeId source, std::vector<int> level,
                         std::vector<std::vector<NodeId>> frontiers);

  NodeId source() const noexcept { return source_; }

  /// Level h of v (its BFS distance from the source), or nullopt when v is
  /// unreachable.
  std::optional<int> level_of(NodeId v) const;

  /// frontiers()[h] lists the nodes at level h in ascending id order;
  /// frontiers()[0] == {source}.
  const std::vector<std::vector<NodeId>>& frontiers() const noexcept {
    return frontiers_;
  }

  /// Largest populated level (the source's eccentricity within its component).
  int max_level() const noexcept {
    return static_cast<int>(frontiers_.size()) - 1;
  }

  /// Size of the graph this decomposition was built from.
  std::size_t node_count() const noexcept { return level_.size(); }

  std::size_t reachable_count() const;

 private:
  NodeId source_;
  std::vector<int> level_;  // -1 encodes "unreachable"
  std::vector<std::vector<NodeId>> frontiers_;
};

/// Levels equal unweighted shortest-path distance from `source`; frontiers
/// are sorted by node id so two runs produce identical output.
HierarchyDecomposition bfs_hierarchy(const Graph& graph, NodeId source);

}  // namespace bundles
