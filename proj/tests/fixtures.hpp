// Shared test fixtures.
#pragma once

#include <string>
#include <vector>

#include "bundles/graph.hpp"

namespace fixtures {

// The didactic bundle sub-structure: original labels {1, 4, 5, 7, 8, 10}
// mapped to dense ids 0..5 in that order. Edges 1-4, 1-5, 4-7, 4-8, 5-7,
// 7-10, 8-10. Source label 1 (id 0), destination label 10 (id 5); the bundle
// between them holds exactly the three paths 1-4-8-10, 1-4-7-10, 1-5-7-10.
inline const std::vector<std::string> kDidacticLabels = {"1", "4", "5",
                                                    "7", "8", "10"};

inline bundles::Graph didactic_bundle_graph() {
  return bundles::Graph(
      6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 5}, {4, 5}});
}

inline std::string didactic_edge_list_text() {
  return "1 4\n1 5\n4 7\n4 8\n5 7\n7 10\n8 10\n";
}

}  // namespace fixtures
