#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "bundles/sbn.hpp"

namespace bundles {

/// Shortest decimal form that parses back to the same double (17 significant
/// digits via %.17g); used by every exporter so files round-trip bit-exactly.
std::string format_double(double value);

/// GraphML with a real-valued "weight" attribute per edge, optional "x"/"y"
/// node attributes, and "L"/"stat" graph attributes.
void write_sbn_graphml(const SbnGraph& sbn, const std::filesystem::path& path);

/// Reads the GraphML subset written by write_sbn_graphml.
SbnGraph read_sbn_graphml(const std::filesystem::path& path);

/// CSV edge list: header "a,b,weight", rows ascending by (a, b).
void write_sbn_csv(const SbnGraph& sbn, const std::filesystem::path& path);
SbnGraph read_sbn_csv(const std::filesystem::path& path);

/// Signature CSV: header "L,edge_count,mean,std"; empty SBNs leave the mean
/// and std cells blank.
void write_signature_csv(std::span<const SignatureRow> rows,
                         const std::filesystem::path& path);

/// Minimal SVG view of an SBN: nodes at their coordinates, edges with stroke
/// width and opacity scaled linearly by weight. A display of results, not an
/// interactive surface. Requires coordinates.
void write_sbn_svg(const SbnGraph& sbn, const std::filesystem::path& path);

/// Minimal SVG histogram of `values` with `bins` equal-width bins.
void write_histogram_svg(std::span<const double> values, int bins,
                         const std::string& title,
                         const std::filesystem::path& path);

}  // namespace bundles
