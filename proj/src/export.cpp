#include "cubepath/export.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <string>

#include <fmt/format.h>

namespace cubepath {

namespace {

constexpr std::array<const char*, 8> kRegionColors = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999"};

}  // namespace

double round12(double v) { return std::stod(format12(v)); }

std::string format12(double v) { return fmt::format("{:.12g}", v); }

Json solve_to_json(const SolveResult& r, double length_scale) {
  Json j;
  j["length"] = round12(r.length * length_scale);
  j["faces"] = r.faces;
  Json mins = Json::array();
  for (const RollSequence& seq : r.minimizers) mins.push_back(seq.to_string());
  j["minimizers"] = std::move(mins);
  Json cands = Json::array();
  for (const PathCandidate& c : r.candidates) {
    Json cj;
    cj["seq"] = c.sequence.to_string();
    cj["length_sq"] = round12(c.length_sq * length_scale * length_scale);
    cj["class"] = std::string(to_string(c.classification));
    cj["faces"] = c.faces;
    cands.push_back(std::move(cj));
  }
  j["candidates"] = std::move(cands);
  return j;
}

Json regions_to_json(const RegionSet& r) {
  Json j;
  j["source"] = {round12(r.source.x), round12(r.source.y)};
  j["union_area"] = round12(r.union_area);
  j["probability"] = round12(r.probability);
  Json regions = Json::array();
  for (const auto& [seq, poly] : r.polygons) {
    if (poly.empty()) continue;
    Json verts = Json::array();
    for (const Point& p : poly.vertices()) verts.push_back({round12(p.x), round12(p.y)});
    Json rj;
    rj["seq"] = seq.to_string();
    rj["area"] = round12(area(poly));
    rj["vertices"] = std::move(verts);
    regions.push_back(std::move(rj));
  }
  j["regions"] = std::move(regions);
  return j;
}

std::string regions_svg(const RegionSet& r) {
  std::string svg;
  svg += R"(<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.1 -1.1 2.2 2.2" width="600" height="600">)"
         "\n";
  fmt::format_to(std::back_inserter(svg), "<title>4-face shortest path regions, source ({}, {})</title>\n",
                 format12(r.source.x), format12(r.source.y));
  // SVG y grows downwards; flip so the plot uses grid coordinates.
  svg += "<g transform=\"scale(1,-1)\">\n";
  svg += R"(<rect x="-1" y="-1" width="2" height="2" fill="white" stroke="black" stroke-width="0.01"/>)"
         "\n";
  svg += R"(<line x1="-1" y1="-1" x2="1" y2="1" stroke="#cccccc" stroke-width="0.004"/>)"
         "\n";
  svg += R"(<line x1="-1" y1="1" x2="1" y2="-1" stroke="#cccccc" stroke-width="0.004"/>)"
         "\n";
  for (std::size_t i = 0; i < r.polygons.size(); ++i) {
    const auto& [seq, poly] = r.polygons[i];
    if (poly.empty()) continue;
    std::string pts;
    for (const Point& p : poly.vertices()) {
      fmt::format_to(std::back_inserter(pts), "{}{},{}", pts.empty() ? "" : " ", format12(p.x), format12(p.y));
    }
    fmt::format_to(std::back_inserter(svg),
                   "<polygon data-seq=\"{}\" points=\"{}\" fill=\"{}\" fill-opacity=\"0.6\" "
                   "stroke=\"black\" stroke-width=\"0.006\"/>\n",
                   seq.to_string(), pts, kRegionColors[i]);
  }
  fmt::format_to(std::back_inserter(svg),
                 "<circle cx=\"{}\" cy=\"{}\" r=\"0.025\" fill=\"cyan\" stroke=\"black\" stroke-width=\"0.006\"/>\n",
                 format12(r.source.x), format12(r.source.y));
  svg += "</g>\n";
  for (const auto& [seq, poly] : r.polygons) {
    if (poly.empty()) continue;
    const Point c = poly.centroid();
    fmt::format_to(std::back_inserter(svg),
                   "<text x=\"{}\" y=\"{}\" font-size=\"0.08\" text-anchor=\"middle\" "
                   "font-family=\"sans-serif\">{}</text>\n",
                   format12(c.x), format12(-c.y), seq.to_string());
  }
  fmt::format_to(std::back_inserter(svg),
                 "<text x=\"{}\" y=\"{}\" font-size=\"0.07\" font-family=\"sans-serif\">S</text>\n",
                 format12(r.source.x + 0.03), format12(-r.source.y - 0.03));
  svg += "</svg>\n";
  return svg;
}

void write_heatmap_csv(std::ostream& out, const ProbabilityGrid& g) {
  out << "s1,s2,probability\n";
  for (std::size_t k = 0; k < g.values.size(); ++k) {
    out << format12(g.coords[k].x) << ',' << format12(g.coords[k].y) << ',' << format12(g.values[k]) << '\n';
  }
}

std::string heatmap_svg(const ProbabilityGrid& g) {
  const double max = g.values.empty() ? 0.0 : *std::max_element(g.values.begin(), g.values.end());
  const double pitch = 2.0 / g.n;
  std::string svg;
  svg += R"(<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.1 -1.1 2.2 2.2" width="600" height="600">)"
         "\n";
  fmt::format_to(std::back_inserter(svg), "<title>4-face shortest path probability, max {}</title>\n",
                 format12(max));
  svg += "<g transform=\"scale(1,-1)\" shape-rendering=\"crispEdges\">\n";
  for (std::size_t k = 0; k < g.values.size(); ++k) {
    const int level = max > 0.0 ? static_cast<int>(std::lround(255.0 * (1.0 - g.values[k] / max))) : 255;
    fmt::format_to(std::back_inserter(svg),
                   "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#{:02x}{:02x}{:02x}\"/>\n",
                   format12(g.coords[k].x - pitch / 2), format12(g.coords[k].y - pitch / 2), format12(pitch),
                   format12(pitch), level, level, level);
  }
  svg += R"(<rect x="-1" y="-1" width="2" height="2" fill="none" stroke="black" stroke-width="0.01"/>)"
         "\n";
  svg += "</g>\n</svg>\n";
  return svg;
}

std::string nets_report(const NetEnumeration& nets) {
  std::string out = fmt::format("tree_count {}\nclass_count {}\n", nets.tree_count, nets.class_count);
  for (std::size_t i = 0; i < nets.representatives.size(); ++i) {
    out += fmt::format("\nnet {}\n{}", i + 1, ascii_art(nets.representatives[i]));
  }
  return out;
}

}  // namespace cubepath
