#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bundles/graph.hpp"

namespace bundles {

/// Directed link between consecutive hierarchy levels, oriented away from
/// the source.
using Link = std::pair<NodeId, NodeId>;

/// The inter-level DAG of a hierarchy decomposition: exactly the graph edges
/// joining consecutive frontiers, oriented away from the source. Edges
/// between nodes of the same level do not appear.
class LeveledDag {
 public:
  LeveledDag(HierarchyDecomposition hierarchy,
             std::vector<std::vector<NodeId>> out,
             std::vector<std::vector<NodeId>> in);

  const HierarchyDecomposition& hierarchy() const noexcept {
    return hierarchy_;
  }

  /// Successors of u (nodes one level further from the source), ascending.
  std::span<const NodeId> out(NodeId u) const { return out_[u]; }
  /// Predecessors of v (nodes one level closer to the source), ascending.
  std::span<const NodeId> in(NodeId v) const { return in_[v]; }

  /// All links, sorted by (level, u, v).
  std::vector<Link> links() const;

 private:
  HierarchyDecomposition hierarchy_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
};

/// The simple bundle between a source and a destination at level L: the
/// sub-DAG of the leveled DAG that is both forward-reachable from the source
/// and backward-reachable from the destination. Every constituent
/// source-to-destination path visits one node per level, so no node repeats.
struct SimpleBundle {
  NodeId source = 0;
  NodeId destination = 0;
  int length = 0;  // L >= 1

  /// level_nodes[h], h = 0..L, ascending ids; [0] = {source}, [L] = {destination}.
  std::vector<std::vector<NodeId>> level_nodes;

  /// links_between(h), h = 1..L: links from level h-1 to level h, ascending (u, v).
  std::vector<std::vector<Link>> level_links;

  const std::vector<Link>& links_between(int h) const {
    return level_links[static_cast<std::size_t>(h) - 1];
  }

  std::size_t node_count() const;
  std::size_t link_count() const;
};

/// Builds the leveled DAG for a hierarchy produced from `graph`.
LeveledDag leveled_dag(const Graph& graph,
                       const HierarchyDecomposition& hierarchy);

/// Extracts the simple bundle ending at `destination`, or nullopt when the
/// destination is unreachable from the DAG's source.
std::optional<SimpleBundle> extract_bundle(const LeveledDag& dag,
                                           NodeId destination);

/// Exact number of descending source-to-destination paths, by dynamic
/// programming over levels. Throws overflow_error instead of wrapping when
/// the count exceeds 64 bits.
std::uint64_t count_paths(const SimpleBundle& bundle);

/// Explicit stack-driven depth-first enumeration of the bundle's paths, in
/// lexicographic order. Throws capacity_error (carrying the count found so
/// far) when more than `cap` paths exist. Intended for tests and small-case
/// dumps; path counts grow binomially, so bulk analysis uses count_paths.
std::vector<std::vector<NodeId>> enumerate_paths(const SimpleBundle& bundle,
                                                 std::uint64_t cap = 1000000);

/// One bundle per node at level L of the source's hierarchy, ordered by
/// destination id. Empty when no node sits at level L.
std::vector<SimpleBundle> all_bundles(const Graph& graph, NodeId source,
                                      int L);

}  // namespace bundles
