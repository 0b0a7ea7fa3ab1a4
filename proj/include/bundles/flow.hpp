#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bundles/bundle.hpp"

namespace bundles {

/// Exponential Shannon entropy exp(-sum p_i ln p_i) with the 0 ln 0 = 0
/// convention: the effective number of choices carried by the distribution.
/// Ranges from 1 (fully concentrated) to p.size() (uniform). The input must
/// be nonnegative and sum to 1 within 1e-9.
double exp_entropy(std::span<const double> p);

/// Uniform-split transition probabilities over bundle links:
/// prob(u -> v) = 1 / outdegree(u). Stored level by level, parallel to
/// SimpleBundle::links_between(h).
struct TransitionMatrix {
  std::vector<std::vector<double>> prob;

  std::span<const double> at_level(int h) const {
    return prob[static_cast<std::size_t>(h) - 1];
  }
};

TransitionMatrix transition_matrix(const SimpleBundle& bundle);

/// Equilibrium diffusion flow of a unit of probability injected at the
/// source, plus the per-level effective widths.
struct FlowResult {
  /// node_flow[h][k] = flow of level_nodes[h][k]; node_flow[0] = {1}.
  std::vector<std::vector<double>> node_flow;
  /// link_flow[h-1][k] = flow of links_between(h)[k]; each level sums to 1.
  std::vector<std::vector<double>> link_flow;
  /// widths[h-1] = E_h = exp_entropy of the level-h link flows, h = 1..L.
  std::vector<double> widths;

  std::span<const double> links_at(int h) const {
    return link_flow[static_cast<std::size_t>(h) - 1];
  }
};

/// Propagates node flow level by level (phi_h = T phi_{h-1} from a one-hot
/// source), derives link flows w(u -> v) = phi(u) T(u -> v), and takes each
/// level's effective width as the exponential entropy of its link flows.
/// Flow conservation across every level cut is asserted at 1e-9, never
/// renormalized.
FlowResult equilibrium_flow(const SimpleBundle& bundle,
                            const TransitionMatrix& T);

/// Width statistics plus the exact path count of one bundle.
struct BundleSummary {
  std::uint64_t path_count = 0;
  double mean_width = 0;  // mu_E = (1/L) sum E_h
  double std_width = 0;   // population standard deviation of {E_h}
  double min_width = 0;
  double max_width = 0;
};

BundleSummary summarize(const SimpleBundle& bundle, const FlowResult& flow);

}  // namespace bundles
