#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "bundles/bundle.hpp"
#include "bundles/flow.hpp"
#include "bundles/graph.hpp"

namespace bundles {

/// Per-bundle summary statistic of the effective widths {E_h}.
enum class WidthStat { mean, min, std_dev, max };

/// Parses "mean" | "min" | "std" | "max"; throws input_error otherwise.
WidthStat parse_width_stat(std::string_view name);
std::string to_string(WidthStat stat);

/// Applies the statistic to a bundle's width sequence.
double width_stat(std::span<const double> widths, WidthStat stat);

/// Simple bundles network for a fixed length L: node pairs at shortest-path
/// distance exactly L, weighted by the average of the two directed bundles'
/// width statistics.
struct SbnGraph {
  int node_count = 0;
  int L = 0;
  WidthStat stat = WidthStat::mean;
  std::optional<Coords> coords;  // copied from the base graph when present

  /// (a, b, weight) with a < b, ascending by (a, b).
  std::vector<std::tuple<NodeId, NodeId, double>> weights;
};

/// Builds the SBN for one L. Both directed bundles of each pair are computed
/// independently (the two hierarchies generally differ); one hierarchy
/// decomposition is reused per source node, so the all-pairs build costs N
/// BFS runs. `threads` parallelizes over source nodes with a deterministic
/// merge.
SbnGraph build_sbn(const Graph& graph, int L, WidthStat stat, int threads = 1);

/// Same sweep for several L values at once, still one BFS per source.
std::vector<SbnGraph> build_sbn_multi(const Graph& graph,
                                      std::span<const int> L_list,
                                      WidthStat stat, int threads = 1);

/// One signature point: mean and population standard deviation of the SBN
/// edge weights at a given L. Empty SBNs keep their row, with the statistics
/// absent.
struct SignatureRow {
  int L = 0;
  std::size_t edge_count = 0;
  std::optional<double> mean_weight;
  std::optional<double> std_weight;
};

/// The signature curve of a network: one row per requested L.
std::vector<SignatureRow> signature(const Graph& graph,
                                    std::span<const int> L_list,
                                    WidthStat stat, int threads = 1);

/// All bundles from one source, grouped per requested L (bundle morphology
/// study). Result is parallel to L_list.
std::vector<std::vector<SimpleBundle>> bundle_morphology(
    const Graph& graph, NodeId source, std::span<const int> L_list);

}  // namespace bundles
