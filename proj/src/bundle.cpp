#include "bundles/bundle.hpp"

#include <algorithm>
#include <string>

namespace bundles {

LeveledDag::LeveledDag(HierarchyDecomposition hierarchy,
                       std::vector<std::vector<NodeId>> out,
                       std::vector<std::vector<NodeId>> in)
    : hierarchy_(std::move(hierarchy)),
      out_(std::move(out)),
      in_(std::move(in)) {}

std::vector<Link> LeveledDag::links() const {
  std::vector<Link> result;
  for (const auto& frontier : hierarchy_.frontiers()) {
    for (NodeId u : frontier) {
      for (NodeId v : out_[static_cast<std::size_t>(u)])
        result.emplace_back(u, v);
    }
  }
  return result;  // frontier order + sorted successors = (level, u, v) order
}

std::size_t SimpleBundle::node_count() const {
  std::size_t total = 0;
  for (const auto& level : level_nodes) total += level.size();
  return total;
}

std::size_t SimpleBundle::link_count() const {
  std::size_t total = 0;
  for (const auto& level : level_links) total += level.size();
  return total;
}

LeveledDag leveled_dag(const Graph& graph,
                       const HierarchyDecomposition& hierarchy) {
  const int n = graph.node_count();
  const NodeId source = hierarchy.source();
  if (hierarchy.node_count() != static_cast<std::size_t>(n) || source < 0 ||
      source >= n || hierarchy.level_of(source) != std::optional<int>(0))
    throw input_error("hierarchy does not belong to this graph");

  std::vector<std::vector<NodeId>> out(static_cast<std::size_t>(n));
  std::vector<std::vector<NodeId>> in(static_cast<std::size_t>(n));
  for (const auto& [u, v] : graph.edges()) {
    const auto hu = hierarchy.level_of(u);
    const auto hv = hierarchy.level_of(v);
    if (!hu || !hv) {
      if (hu != hv)
        throw input_error("hierarchy does not belong to this graph");
      continue;  // edge within an unreached component
    }
    if (*hv == *hu + 1) {
      out[static_cast<std::size_t>(u)].push_back(v);
      in[static_cast<std::size_t>(v)].push_back(u);
    } else if (*hu == *hv + 1) {
      out[static_cast<std::size_t>(v)].push_back(u);
      in[static_cast<std::size_t>(u)].push_back(v);
    } else if (*hu != *hv) {
      // BFS levels of adjacent nodes differ by at most one.
      throw input_error("hierarchy does not belong to this graph");
    }
  }
  for (auto& list : out) std::sort(list.begin(), list.end());
  for (auto& list : in) std::sort(list.begin(), list.end());
  return LeveledDag(hierarchy, std::move(out), std::move(in));
}

std::optional<SimpleBundle> extract_bundle(const LeveledDag& dag,
                                           NodeId destination) {
  const auto& hierarchy = dag.hierarchy();
  if (destination == hierarchy.source())
    throw input_error("destination equals the source node");
  const auto level = hierarchy.level_of(destination);
  if (!level) return std::nullopt;
  const int L = *level;

  // Every DAG node is forward-reachable from the source, so the bundle is
  // the backward-reachable set from the destination plus the links it spans.
  SimpleBundle bundle;
  bundle.source = hierarchy.source();
  bundle.destination = destination;
  bundle.length = L;
  bundle.level_nodes.assign(static_cast<std::size_t>(L) + 1, {});
  bundle.level_links.assign(static_cast<std::size_t>(L), {});

  bundle.level_nodes[static_cast<std::size_t>(L)] = {destination};
  for (int h = L; h >= 1; --h) {
    auto& members = bundle.level_nodes[static_cast<std::size_t>(h)];
    auto& links = bundle.level_links[static_cast<std::size_t>(h) - 1];
    std::vector<NodeId> parents;
    for (NodeId v : members) {
      for (NodeId u : dag.in(v)) {
        links.emplace_back(u, v);
        parents.push_back(u);
      }
    }
    std::sort(parents.begin(), parents.end());
    parents.erase(std::unique(parents.begin(), parents.end()), parents.end());
    std::sort(links.begin(), links.end());
    bundle.level_nodes[static_cast<std::size_t>(h) - 1] = std::move(parents);
  }
  return bundle;
}

std::uint64_t count_paths(const SimpleBundle& bundle) {
  std::vector<std::uint64_t> counts = {1};  // paths reaching each node, per level
  std::vector<NodeId> nodes = bundle.level_nodes[0];
  for (int h = 1; h <= bundle.length; ++h) {
    const auto& next_nodes =
        bundle.level_nodes[static_cast<std::size_t>(h)];
    std::vector<std::uint64_t> next_counts(next_nodes.size(), 0);
    for (const auto& [u, v] : bundle.links_between(h)) {
      const auto ui = static_cast<std::size_t>(
          std::lower_bound(nodes.begin(), nodes.end(), u) - nodes.begin());
      const auto vi = static_cast<std::size_t>(
          std::lower_bound(next_nodes.begin(), next_nodes.end(), v) -
          next_nodes.begin());
      if (__builtin_add_overflow(next_counts[vi], counts[ui],
                                 &next_counts[vi]))
        throw overflow_error(
            "path count exceeds 64 bits for bundle " +
            std::to_string(bundle.source) + " -> " +
            std::to_string(bundle.destination));
    }
    counts = std::move(next_counts);
    nodes = next_nodes;
  }
  return counts.back();
}

std::vector<std::vector<NodeId>> enumerate_paths(const SimpleBundle& bundle,
                                                 std::uint64_t cap) {
  if (cap < 1) throw input_error("enumeration cap must be at least 1");

  // Successor lists local to the bundle.
  std::vector<std::vector<std::vector<NodeId>>> succ(
      static_cast<std::size_t>(bundle.length));
  for (int h = 1; h <= bundle.length; ++h) {
    const auto& nodes = bundle.level_nodes[static_cast<std::size_t>(h) - 1];
    auto& table = succ[static_cast<std::size_t>(h) - 1];
    table.assign(nodes.size(), {});
    for (const auto& [u, v] : bundle.links_between(h)) {
      const auto ui = static_cast<std::size_t>(
          std::lower_bound(nodes.begin(), nodes.end(), u) - nodes.begin());
      table[ui].push_back(v);  // ascending: links are sorted by (u, v)
    }
  }

  // Depth-first walk with an explicit stack: taking one outgoing link as the
  // continuation and pushing the remaining ones. Children are pushed in
  // descending order so paths come out lexicographically sorted.
  std::vector<std::vector<NodeId>> paths;
  std::vector<NodeId> current(static_cast<std::size_t>(bundle.length) + 1);
  struct Frame {
    NodeId node;
    int level;
  };
  std::vector<Frame> stack{{bundle.source, 0}};
  while (!stack.empty()) {
    const auto [node, level] = stack.back();
    stack.pop_back();
    current[static_cast<std::size_t>(level)] = node;
    if (level == bundle.length) {
      if (paths.size() == cap)
        throw capacity_error("bundle " + std::to_string(bundle.source) +
                                 " -> " + std::to_string(bundle.destination) +
                                 " has more than " + std::to_string(cap) +
                                 " paths",
                             cap);
      paths.push_back(current);
      continue;
    }
    const auto& nodes = bundle.level_nodes[static_cast<std::size_t>(level)];
    const auto ni = static_cast<std::size_t>(
        std::lower_bound(nodes.begin(), nodes.end(), node) - nodes.begin());
    const auto& children = succ[static_cast<std::size_t>(level)][ni];
    for (auto it = children.rbegin(); it != children.rend(); ++it)
      stack.push_back({*it, level + 1});
  }
  return paths;
}

std::vector<SimpleBundle> all_bundles(const Graph& graph, NodeId source,
                                      int L) {
  if (L < 1) throw input_error("bundle length must be at least 1");
  const auto hierarchy = bfs_hierarchy(graph, source);
  if (L > hierarchy.max_level()) return {};
  const LeveledDag dag = leveled_dag(graph, hierarchy);

  std::vector<SimpleBundle> bundles;
  for (NodeId destination :
       hierarchy.frontiers()[static_cast<std::size_t>(L)]) {
    auto bundle = extract_bundle(dag, destination);
    bundles.push_back(std::move(*bundle));  // frontier nodes are reachable
  }
  return bundles;
}

}  // namespace bundles
