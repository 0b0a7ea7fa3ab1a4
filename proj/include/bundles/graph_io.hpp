#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "bundles/graph.hpp"

namespace bundles {

/// A graph together with the external node labels it was loaded with.
/// `labels[id]` is the original label of dense id `id`; `labeled` is false
/// when the file already used dense 0..n-1 ids (JSON schema).
struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;
  bool labeled = false;

  std::string label_of(NodeId v) const;
};

/// Loads the JSON graph schema: {"n": int, "edges": [[u, v], ...] with
/// u < v, "coords": [[x, y], ...] optional, length n}. Throws schema_error
/// naming the offending record on malformed input, id range violations,
/// self-loops, or duplicate edges.
Graph load_graph_json(const std::filesystem::path& path);

/// Loads either the JSON schema (content starting with '{') or a
/// whitespace-separated edge-list text file, one "u v" pair per line, whose
/// arbitrary labels are mapped to dense ids in order of first appearance.
LoadedGraph load_graph(const std::filesystem::path& path);

/// Writes the JSON graph schema. load(save(g)) == g bit-exactly (edge set
/// and coords; doubles are serialized with round-trip precision).
void save_graph(const Graph& graph, const std::filesystem::path& path);

}  // namespace bundles
