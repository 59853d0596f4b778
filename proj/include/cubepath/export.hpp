#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cubepath/distribution.hpp"
#include "cubepath/nets.hpp"
#include "cubepath/regions.hpp"
#include "cubepath/solver.hpp"

namespace cubepath {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so serialized floats are stable.
double round12(double v);
std::string format12(double v);

/// {length, faces, minimizers, candidates: [{seq, length_sq, class, faces}]}.
/// Lengths are multiplied by `length_scale` (squared lengths by its square).
Json solve_to_json(const SolveResult& r, double length_scale = 1.0);

/// {source: [s1, s2], union_area, probability, regions: [{seq, vertices}]}
/// with only the nonempty regions listed.
Json regions_to_json(const RegionSet& r);

/// Base face, source point, and each nonempty region labelled with its roll
/// sequence. The view box is the base face plus a 5% margin.
std::string regions_svg(const RegionSet& r);

/// Header `s1,s2,probability`, one row per lattice point, s2 slow.
void write_heatmap_csv(std::ostream& out, const ProbabilityGrid& g);

/// Grayscale raster: 0 is white, the grid maximum is black.
std::string heatmap_svg(const ProbabilityGrid& g);

std::string nets_report(const NetEnumeration& nets);

}  // namespace cubepath
