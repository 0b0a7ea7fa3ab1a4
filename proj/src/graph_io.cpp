#include "bundles/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace bundles {
namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw schema_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph parse_graph_json(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw schema_error(origin + ": not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw schema_error(origin + ": expected an object with \"n\" and \"edges\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
    throw schema_error(origin + ": \"n\" must be a nonnegative integer");
  const int n = doc["n"].get<int>();

  if (!doc["edges"].is_array())
    throw schema_error(origin + ": \"edges\" must be an array");
  std::vector<Edge> edges;
  std::vector<Edge> seen;
  for (const auto& record : doc["edges"]) {
    if (!record.is_array() || record.size() != 2 ||
        !record[0].is_number_integer() || !record[1].is_number_integer())
      throw schema_error(origin + ": edge record " + record.dump() +
                         " is not an [u, v] integer pair");
    const int u = record[0].get<int>();
    const int v = record[1].get<int>();
    if (u == v)
      throw schema_error(origin + ": edge " + record.dump() +
                         " is a self-loop");
    if (u > v)
      throw schema_error(origin + ": edge " + record.dump() +
                         " violates u < v");
    if (u < 0 || v >= n)
      throw schema_error(origin + ": edge " + record.dump() +
                         " references a node outside 0.." + std::to_string(n - 1));
    edges.emplace_back(u, v);
  }
  seen = edges;
  std::sort(seen.begin(), seen.end());
  if (auto dup = std::adjacent_find(seen.begin(), seen.end());
      dup != seen.end())
    throw schema_error(origin + ": edge [" + std::to_string(dup->first) +
                       "," + std::to_string(dup->second) + "] listed twice");

  std::optional<Coords> coords;
  if (doc.contains("coords")) {
    if (!doc["coords"].is_array() ||
        static_cast<int>(doc["coords"].size()) != n)
      throw schema_error(origin + ": \"coords\" must be an array of length " +
                         std::to_string(n));
    Coords parsed;
    parsed.reserve(static_cast<std::size_t>(n));
    for (const auto& record : doc["coords"]) {
      if (!record.is_array() || record.size() != 2 ||
          !record[0].is_number() || !record[1].is_number())
        throw schema_error(origin + ": coordinate record " + record.dump() +
                           " is not an [x, y] pair");
      parsed.push_back({record[0].get<double>(), record[1].get<double>()});
    }
    coords = std::move(parsed);
  }
  return Graph(n, std::move(edges), std::move(coords));
}

LoadedGraph parse_edge_list(const std::string& text,
                            const std::string& origin) {
  std::map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<Edge> canonical;

  const auto intern = [&](const std::string& label) {
    auto [it, inserted] =
        ids.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;  // blank line
    if (!(fields >> b) || (fields >> extra))
      throw schema_error(origin + ":" + std::to_string(line_no) +
                         ": expected exactly two labels per line");
    if (a == b)
      throw schema_error(origin + ":" + std::to_string(line_no) +
                         ": self-loop \"" + a + " " + b + "\"");
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    edges.emplace_back(u, v);
    canonical.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (labels.empty()) throw schema_error(origin + ": no edges found");

  std::sort(canonical.begin(), canonical.end());
  if (auto dup = std::adjacent_find(canonical.begin(), canonical.end());
      dup != canonical.end())
    throw schema_error(origin + ": edge \"" + labels[static_cast<std::size_t>(
                                                  dup->first)] +
                       " " + labels[static_cast<std::size_t>(dup->second)] +
                       "\" listed twice");

  return LoadedGraph{Graph(static_cast<int>(labels.size()), std::move(edges)),
                     std::move(labels), true};
}

}  // namespace

std::string LoadedGraph::label_of(NodeId v) const {
  if (labeled) return labels[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

Graph load_graph_json(const std::filesystem::path& path) {
  return parse_graph_json(read_file(path), path.string());
}

LoadedGraph load_graph(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return LoadedGraph{parse_graph_json(text, path.string()), {}, false};
  return parse_edge_list(text, path.string());
}

void save_graph(const Graph& graph, const std::filesystem::path& path) {
  json doc;
  doc["n"] = graph.node_count();
  auto edges = json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  if (graph.has_coords()) {
    auto coords = json::array();
    for (const auto& [x, y] : graph.coords()) coords.push_back({x, y});
    doc["coords"] = std::move(coords);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw schema_error("cannot write " + path.string());
  out << doc.dump() << "\n";
}

}  // namespace bundles
