#include "bundles/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "bundles/errors.hpp"

namespace bundles {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw schema_error("cannot write " + path.string());
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw schema_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_sbn_graphml(const SbnGraph& sbn,
                       const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
      << "  <key id=\"x\" for=\"node\" attr.name=\"x\" attr.type=\"double\"/>\n"
      << "  <key id=\"y\" for=\"node\" attr.name=\"y\" attr.type=\"double\"/>\n"
      << "  <key id=\"L\" for=\"graph\" attr.name=\"L\" attr.type=\"int\"/>\n"
      << "  <key id=\"stat\" for=\"graph\" attr.name=\"stat\" attr.type=\"string\"/>\n"
      << "  <graph id=\"sbn\" edgedefault=\"undirected\">\n"
      << "    <data key=\"L\">" << sbn.L << "</data>\n"
      << "    <data key=\"stat\">" << to_string(sbn.stat) << "</data>\n";
  for (int v = 0; v < sbn.node_count; ++v) {
    out << "    <node id=\"n" << v << "\">";
    if (sbn.coords) {
      const auto& [x, y] = (*sbn.coords)[static_cast<std::size_t>(v)];
      out << "<data key=\"x\">" << format_double(x) << "</data>"
          << "<data key=\"y\">" << format_double(y) << "</data>";
    }
    out << "</node>\n";
  }
  for (const auto& [a, b, w] : sbn.weights) {
    out << "    <edge source=\"n" << a << "\" target=\"n" << b
        << "\"><data key=\"weight\">" << format_double(w)
        << "</data></edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

SbnGraph read_sbn_graphml(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  SbnGraph sbn;

  const std::regex graph_data(R"re(<data key="(L|stat)">([^<]*)</data>)re");
  const std::regex node_re(
      R"re(<node id="n(\d+)">(?:<data key="x">([^<]*)</data><data key="y">([^<]*)</data>)?</node>)re");
  const std::regex edge_re(
      R"re(<edge source="n(\d+)" target="n(\d+)"><data key="weight">([^<]*)</data></edge>)re");

  for (auto it = std::sregex_iterator(text.begin(), text.end(), graph_data);
       it != std::sregex_iterator(); ++it) {
    if ((*it)[1] == "L")
      sbn.L = std::stoi((*it)[2]);
    else
      sbn.stat = parse_width_stat((*it)[2].str());
  }

  Coords coords;
  bool any_coords = false;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), node_re);
       it != std::sregex_iterator(); ++it) {
    const int id = std::stoi((*it)[1]);
    sbn.node_count = std::max(sbn.node_count, id + 1);
    coords.resize(static_cast<std::size_t>(sbn.node_count), {0.0, 0.0});
    if ((*it)[2].matched) {
      any_coords = true;
      coords[static_cast<std::size_t>(id)] = {std::stod((*it)[2]),
                                              std::stod((*it)[3])};
    }
  }
  if (any_coords) sbn.coords = std::move(coords);

  for (auto it = std::sregex_iterator(text.begin(), text.end(), edge_re);
       it != std::sregex_iterator(); ++it) {
    sbn.weights.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]),
                             std::stod((*it)[3]));
  }
  std::sort(sbn.weights.begin(), sbn.weights.end(),
            [](const auto& lhs, const auto& rhs) {
              return std::pair(std::get<0>(lhs), std::get<1>(lhs)) <
                     std::pair(std::get<0>(rhs), std::get<1>(rhs));
            });
  return sbn;
}

void write_sbn_csv(const SbnGraph& sbn, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "a,b,weight\n";
  for (const auto& [a, b, w] : sbn.weights)
    out << a << "," << b << "," << format_double(w) << "\n";
}

SbnGraph read_sbn_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw schema_error("cannot open " + path.string());
  SbnGraph sbn;
  std::string line;
  if (!std::getline(in, line) || line != "a,b,weight")
    throw schema_error(path.string() + ": expected header a,b,weight");
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    int a = 0, b = 0;
    double w = 0.0;
    if (std::sscanf(line.c_str(), "%d,%d,%lf", &a, &b, &w) != 3)
      throw schema_error(path.string() + ":" + std::to_string(line_no) +
                         ": malformed row \"" + line + "\"");
    sbn.weights.emplace_back(a, b, w);
    sbn.node_count = std::max(sbn.node_count, std::max(a, b) + 1);
  }
  return sbn;
}

void write_signature_csv(std::span<const SignatureRow> rows,
                         const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "L,edge_count,mean,std\n";
  for (const auto& row : rows) {
    out << row.L << "," << row.edge_count << ",";
    if (row.mean_weight) out << format_double(*row.mean_weight);
    out << ",";
    if (row.std_weight) out << format_double(*row.std_weight);
    out << "\n";
  }
}

void write_sbn_svg(const SbnGraph& sbn, const std::filesystem::path& path) {
  if (!sbn.coords)
    throw input_error("SVG export needs node coordinates");
  const auto& coords = *sbn.coords;

  double min_x = coords[0][0], max_x = coords[0][0];
  double min_y = coords[0][1], max_y = coords[0][1];
  for (const auto& [x, y] : coords) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = 600.0 / span;
  const double margin = 30.0;
  const auto px = [&](double x) { return margin + (x - min_x) * scale; };
  const auto py = [&](double y) { return margin + (y - min_y) * scale; };

  double max_w = 0.0;
  for (const auto& [a, b, w] : sbn.weights) max_w = std::max(max_w, w);
  if (max_w <= 0.0) max_w = 1.0;

  auto out = open_out(path);
  const double width = 2 * margin + (max_x - min_x) * scale;
  const double height = 2 * margin + (max_y - min_y) * scale;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  for (const auto& [a, b, w] : sbn.weights) {
    const auto& pa = coords[static_cast<std::size_t>(a)];
    const auto& pb = coords[static_cast<std::size_t>(b)];
    // Linear weight-to-stroke mapping; opacity tracks weight as well.
    const double stroke = 0.5 + 4.5 * (w / max_w);
    const double opacity = 0.25 + 0.75 * (w / max_w);
    out << "  <line x1=\"" << px(pa[0]) << "\" y1=\"" << py(pa[1])
        << "\" x2=\"" << px(pb[0]) << "\" y2=\"" << py(pb[1])
        << "\" stroke=\"#1f4e8c\" stroke-width=\"" << stroke
        << "\" stroke-opacity=\"" << opacity << "\"/>\n";
  }
  for (const auto& [x, y] : coords) {
    out << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y)
        << "\" r=\"3\" fill=\"#333333\"/>\n";
  }
  out << "</svg>\n";
}

void write_histogram_svg(std::span<const double> values, int bins,
                         const std::string& title,
                         const std::filesystem::path& path) {
  if (bins < 1) throw input_error("histogram needs at least one bin");
  double lo = 0.0, hi = 1.0;
  if (!values.empty()) {
    lo = *std::min_element(values.begin(), values.end());
    hi = *std::max_element(values.begin(), values.end());
  }
  if (hi <= lo) hi = lo + 1.0;

  std::vector<int> counts(static_cast<std::size_t>(bins), 0);
  for (double v : values) {
    auto k = static_cast<std::size_t>((v - lo) / (hi - lo) *
                                      static_cast<double>(bins));
    if (k >= counts.size()) k = counts.size() - 1;
    ++counts[k];
  }
  const int peak = counts.empty()
                       ? 1
                       : std::max(1, *std::max_element(counts.begin(),
                                                       counts.end()));

  const double width = 480.0, height = 320.0, margin = 40.0;
  const double bar_w = (width - 2 * margin) / bins;
  auto out = open_out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n"
      << "  <text x=\"" << width / 2
      << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << title
      << "</text>\n";
  for (int k = 0; k < bins; ++k) {
    const double h = (height - 2 * margin) *
                     counts[static_cast<std::size_t>(k)] / peak;
    out << "  <rect x=\"" << margin + k * bar_w << "\" y=\""
        << height - margin - h << "\" width=\"" << bar_w * 0.9
        << "\" height=\"" << h << "\" fill=\"#4a7ab5\"/>\n";
  }
  out << "  <text x=\"" << margin << "\" y=\"" << height - margin + 16
      << "\" font-size=\"11\">" << format_double(lo) << "</text>\n"
      << "  <text x=\"" << width - margin << "\" y=\"" << height - margin + 16
      << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(hi)
      << "</text>\n</svg>\n";
}

}  // namespace bundles
