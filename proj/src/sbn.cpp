#include "bundles/sbn.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace bundles {

WidthStat parse_width_stat(std::string_view name) {
  if (name == "mean") return WidthStat::mean;
  if (name == "min") return WidthStat::min;
  if (name == "std") return WidthStat::std_dev;
  if (name == "max") return WidthStat::max;
  throw input_error("unknown width statistic '" + std::string(name) +
                    "' (expected mean, min, std, or max)");
}

std::string to_string(WidthStat stat) {
  switch (stat) {
    case WidthStat::mean: return "mean";
    case WidthStat::min: return "min";
    case WidthStat::std_dev: return "std";
    case WidthStat::max: return "max";
  }
  return "mean";
}

double width_stat(std::span<const double> widths, WidthStat stat) {
  if (widths.empty()) throw input_error("empty width sequence");
  double sum = 0.0;
  for (double w : widths) sum += w;
  const double mean = sum / static_cast<double>(widths.size());
  switch (stat) {
    case WidthStat::mean:
      return mean;
    case WidthStat::min:
      return *std::min_element(widths.begin(), widths.end());
    case WidthStat::max:
      return *std::max_element(widths.begin(), widths.end());
    case WidthStat::std_dev: {
      double sq = 0.0;
      for (double w : widths) sq += (w - mean) * (w - mean);
      return std::sqrt(sq / static_cast<double>(widths.size()));
    }
  }
  return mean;
}

namespace {

// Directed per-source results of one all-pairs sweep: stat value and bundle
// length for every reachable destination.
struct DirectedStats {
  std::vector<double> value;  // indexed by destination
  std::vector<int> length;    // -1 where no requested-L bundle exists
};

DirectedStats sweep_source(const Graph& graph, NodeId source,
                           const std::vector<bool>& wanted, WidthStat stat) {
  DirectedStats out;
  out.value.assign(static_cast<std::size_t>(graph.node_count()), 0.0);
  out.length.assign(static_cast<std::size_t>(graph.node_count()), -1);

  const auto hierarchy = bfs_hierarchy(graph, source);
  const LeveledDag dag = leveled_dag(graph, hierarchy);
  for (int L = 1; L <= hierarchy.max_level(); ++L) {
    if (L >= static_cast<int>(wanted.size()) || !wanted[static_cast<std::size_t>(L)])
      continue;
    for (NodeId dest : hierarchy.frontiers()[static_cast<std::size_t>(L)]) {
      const auto bundle = extract_bundle(dag, dest);
      const auto flow = equilibrium_flow(*bundle, transition_matrix(*bundle));
      out.value[static_cast<std::size_t>(dest)] =
          width_stat(flow.widths, stat);
      out.length[static_cast<std::size_t>(dest)] = L;
    }
  }
  return out;
}

}  // namespace

std::vector<SbnGraph> build_sbn_multi(const Graph& graph,
                                      std::span<const int> L_list,
                                      WidthStat stat, int threads) {
  if (L_list.empty()) throw input_error("empty L list");
  int max_L = 0;
  for (int L : L_list) {
    if (L < 1) throw input_error("bundle length must be at least 1");
    max_L = std::max(max_L, L);
  }
  std::vector<bool> wanted(static_cast<std::size_t>(max_L) + 1, false);
  for (int L : L_list) wanted[static_cast<std::size_t>(L)] = true;

  const int n = graph.node_count();
  std::vector<DirectedStats> per_source(static_cast<std::size_t>(n));

  threads = std::clamp(threads, 1, std::max(1, n));
  if (threads == 1) {
    for (NodeId s = 0; s < n; ++s)
      per_source[static_cast<std::size_t>(s)] =
          sweep_source(graph, s, wanted, stat);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t]() {
        for (NodeId s = t; s < n; s += threads)
          per_source[static_cast<std::size_t>(s)] =
              sweep_source(graph, s, wanted, stat);
      });
    }
    for (auto& worker : pool) worker.join();
  }

  // Deterministic merge: pairs in ascending (a, b) order per L.
  std::vector<SbnGraph> result;
  result.reserve(L_list.size());
  for (int L : L_list) {
    SbnGraph sbn;
    sbn.node_count = n;
    sbn.L = L;
    sbn.stat = stat;
    if (graph.has_coords()) sbn.coords = graph.coords();
    for (NodeId a = 0; a < n; ++a) {
      const auto& from_a = per_source[static_cast<std::size_t>(a)];
      for (NodeId b = a + 1; b < n; ++b) {
        if (from_a.length[static_cast<std::size_t>(b)] != L) continue;
        const auto& from_b = per_source[static_cast<std::size_t>(b)];
        const double w = 0.5 * (from_a.value[static_cast<std::size_t>(b)] +
                                from_b.value[static_cast<std::size_t>(a)]);
        sbn.weights.emplace_back(a, b, w);
      }
    }
    result.push_back(std::move(sbn));
  }
  return result;
}

SbnGraph build_sbn(const Graph& graph, int L, WidthStat stat, int threads) {
  const int L_list[] = {L};
  return std::move(build_sbn_multi(graph, L_list, stat, threads).front());
}

std::vector<SignatureRow> signature(const Graph& graph,
                                    std::span<const int> L_list,
                                    WidthStat stat, int threads) {
  std::vector<SignatureRow> rows;
  for (const SbnGraph& sbn : build_sbn_multi(graph, L_list, stat, threads)) {
    SignatureRow row;
    row.L = sbn.L;
    row.edge_count = sbn.weights.size();
    if (!sbn.weights.empty()) {
      double sum = 0.0;
      for (const auto& [a, b, w] : sbn.weights) sum += w;
      const double mean = sum / static_cast<double>(sbn.weights.size());
      double sq = 0.0;
      for (const auto& [a, b, w] : sbn.weights) sq += (w - mean) * (w - mean);
      row.mean_weight = mean;
      row.std_weight =
          std::sqrt(sq / static_cast<double>(sbn.weights.size()));
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<SimpleBundle>> bundle_morphology(
    const Graph& graph, NodeId source, std::span<const int> L_list) {
  const auto hierarchy = bfs_hierarchy(graph, source);
  const LeveledDag dag = leveled_dag(graph, hierarchy);

  std::vector<std::vector<SimpleBundle>> per_L;
  per_L.reserve(L_list.size());
  for (int L : L_list) {
    if (L < 1) throw input_error("bundle length must be at least 1");
    std::vector<SimpleBundle> bundles;
    if (L <= hierarchy.max_level()) {
      for (NodeId dest : hierarchy.frontiers()[static_cast<std::size_t>(L)])
        bundles.push_back(std::move(*extract_bundle(dag, dest)));
    }
    per_L.push_back(std::move(bundles));
  }
  return per_L;
}

}  // namespace bundles
