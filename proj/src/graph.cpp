#include "bundles/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace bundles {

Graph::Graph(int node_count, std::vector<Edge> edges,
             std::optional<Coords> coords)
    : n_(node_count), edges_(std::move(edges)), coords_(std::move(coords)) {
  if (n_ < 0) throw input_error("node count must be nonnegative");
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw input_error("edge (" + std::to_string(u) + ", " +
                        std::to_string(v) + ") references a node outside 0.." +
                        std::to_string(n_ - 1));
    if (u == v)
      throw input_error("self-loop on node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    auto dup = *std::adjacent_find(edges_.begin(), edges_.end());
    throw input_error("duplicate edge (" + std::to_string(dup.first) + ", " +
                      std::to_string(dup.second) + ")");
  }
  if (coords_ && static_cast<int>(coords_->size()) != n_)
    throw input_error("coords length " + std::to_string(coords_->size()) +
                      " does not match node count " + std::to_string(n_));

  adj_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

void Graph::check_node(NodeId v) const {
  if (v < 0 || v >= n_)
    throw input_error("node id " + std::to_string(v) + " outside 0.." +
                      std::to_string(n_ - 1));
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  check_node(v);
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const Coords& Graph::coords() const {
  if (!coords_) throw input_error("graph carries no coordinates");
  return *coords_;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && edges_ == other.edges_ && coords_ == other.coords_;
}

HierarchyDecomposition::HierarchyDecomposition(
    NodeId source, std::vector<int> level,
    std::vector<std::vector<NodeId>> frontiers)
    : source_(source),
      level_(std::move(level)),
      frontiers_(std::move(frontiers)) {}

std::optional<int> HierarchyDecomposition::level_of(NodeId v) const {
  if (v < 0 || v >= static_cast<int>(level_.size()))
    throw input_error("node id " + std::to_string(v) +
                      " outside the decomposed graph");
  const int h = level_[static_cast<std::size_t>(v)];
  if (h < 0) return std::nullopt;
  return h;
}

std::size_t HierarchyDecomposition::reachable_count() const {
  std::size_t total = 0;
  for (const auto& f : frontiers_) total += f.size();
  return total;
}

HierarchyDecomposition bfs_hierarchy(const Graph& graph, NodeId source) {
  if (source < 0 || source >= graph.node_count())
    throw input_error("source id " + std::to_string(source) +
                      " outside 0.." + std::to_string(graph.node_count() - 1));

  std::vector<int> level(static_cast<std::size_t>(graph.node_count()), -1);
  std::vector<std::vector<NodeId>> frontiers;
  level[static_cast<std::size_t>(source)] = 0;
  frontiers.push_back({source});

  while (true) {
    std::vector<NodeId> next;
    for (NodeId u : frontiers.back()) {
      for (NodeId v : graph.neighbors(u)) {
        if (level[static_cast<std::size_t>(v)] < 0) {
          level[static_cast<std::size_t>(v)] =
              static_cast<int>(frontiers.size());
          next.push_back(v);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    frontiers.push_back(std::move(next));
  }
  return HierarchyDecomposition(source, std::move(level),
                                std::move(frontiers));
}

}  // namespace bundles
