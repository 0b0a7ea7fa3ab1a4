#include "bundles/flow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bundles {
namespace {

constexpr double kNormTolerance = 1e-9;

std::size_t index_in(const std::vector<NodeId>& sorted_nodes, NodeId v) {
  return static_cast<std::size_t>(
      std::lower_bound(sorted_nodes.begin(), sorted_nodes.end(), v) -
      sorted_nodes.begin());
}

}  // namespace

double exp_entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double value : p) {
    if (value < 0.0)
      throw input_error("probabilities must be nonnegative, got " +
                        std::to_string(value));
    sum += value;
  }
  if (std::fabs(sum - 1.0) > kNormTolerance)
    throw input_error("probabilities sum to " + std::to_string(sum) +
                      ", expected 1 within 1e-9");
  double entropy = 0.0;
  for (double value : p) {
    if (value > 0.0) entropy -= value * std::log(value);  // 0 ln 0 = 0
  }
  return std::exp(entropy);
}

TransitionMatrix transition_matrix(const SimpleBundle& bundle) {
  TransitionMatrix T;
  T.prob.resize(static_cast<std::size_t>(bundle.length));
  for (int h = 1; h <= bundle.length; ++h) {
    const auto& links = bundle.links_between(h);
    auto& probs = T.prob[static_cast<std::size_t>(h) - 1];
    probs.resize(links.size());
    // Links are sorted by (u, v), so each node's outgoing links form a run.
    std::size_t run_begin = 0;
    while (run_begin < links.size()) {
      std::size_t run_end = run_begin;
      while (run_end < links.size() &&
             links[run_end].first == links[run_begin].first)
        ++run_end;
      const double split = 1.0 / static_cast<double>(run_end - run_begin);
      for (std::size_t k = run_begin; k < run_end; ++k) probs[k] = split;
      run_begin = run_end;
    }
  }
  return T;
}

FlowResult equilibrium_flow(const SimpleBundle& bundle,
                            const TransitionMatrix& T) {
  if (T.prob.size() != static_cast<std::size_t>(bundle.length))
    throw input_error("transition matrix does not match the bundle");

  FlowResult flow;
  flow.node_flow.resize(static_cast<std::size_t>(bundle.length) + 1);
  flow.link_flow.resize(static_cast<std::size_t>(bundle.length));
  flow.widths.resize(static_cast<std::size_t>(bundle.length));
  flow.node_flow[0] = {1.0};

  for (int h = 1; h <= bundle.length; ++h) {
    const auto& links = bundle.links_between(h);
    const auto& probs = T.prob[static_cast<std::size_t>(h) - 1];
    const auto& from_nodes =
        bundle.level_nodes[static_cast<std::size_t>(h) - 1];
    const auto& to_nodes = bundle.level_nodes[static_cast<std::size_t>(h)];
    const auto& from_flow = flow.node_flow[static_cast<std::size_t>(h) - 1];

    auto& link_flow = flow.link_flow[static_cast<std::size_t>(h) - 1];
    auto& to_flow = flow.node_flow[static_cast<std::size_t>(h)];
    link_flow.resize(links.size());
    to_flow.assign(to_nodes.size(), 0.0);

    double cut_total = 0.0;
    for (std::size_t k = 0; k < links.size(); ++k) {
      const auto& [u, v] = links[k];
      const double w = from_flow[index_in(from_nodes, u)] * probs[k];
      link_flow[k] = w;
      to_flow[index_in(to_nodes, v)] += w;
      cut_total += w;
    }
    if (std::fabs(cut_total - 1.0) > kNormTolerance)
      throw std::logic_error("flow across level cut " + std::to_string(h) +
                             " sums to " + std::to_string(cut_total) +
                             " instead of 1");
    flow.widths[static_cast<std::size_t>(h) - 1] = exp_entropy(link_flow);
  }
  return flow;
}

BundleSummary summarize(const SimpleBundle& bundle, const FlowResult& flow) {
  if (flow.widths.size() != static_cast<std::size_t>(bundle.length))
    throw input_error("flow result does not match the bundle");

  BundleSummary summary;
  summary.path_count = count_paths(bundle);

  double sum = 0.0;
  summary.min_width = flow.widths.front();
  summary.max_width = flow.widths.front();
  for (double w : flow.widths) {
    sum += w;
    summary.min_width = std::min(summary.min_width, w);
    summary.max_width = std::max(summary.max_width, w);
  }
  summary.mean_width = sum / static_cast<double>(flow.widths.size());

  double sq = 0.0;
  for (double w : flow.widths) {
    const double d = w - summary.mean_width;
    sq += d * d;
  }
  summary.std_width = std::sqrt(sq / static_cast<double>(flow.widths.size()));
  return summary;
}

}  // namespace bundles
