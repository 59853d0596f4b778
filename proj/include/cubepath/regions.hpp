#pragma once

#include <array>
#include <utility>
#include <vector>

#include "cubepath/geometry.hpp"
#include "cubepath/unfolding.hpp"

namespace cubepath {

/// The open half-plane of targets (x, y) for which the path along `seq4` is
/// strictly shorter than the one along `seq3`, with source `s`. The squared
/// terms cancel, leaving a linear inequality whose coefficients are affine
/// in the source coordinates. Comparing a sequence with itself gives the
/// degenerate empty half-plane.
HalfPlane halfplane_for(const RollSequence& seq4, const RollSequence& seq3, Point s);

/// Targets in the base face whose path along `seq4` beats all four 3-face
/// paths. Closed polygon; the open region is its interior.
ConvexPolygon region_polygon(Point s, const RollSequence& seq4);

/// 3-roll sequences that can produce 4-face shortest paths from `s`,
/// obtained by mapping `s` into the canonical triangle. Table order.
std::vector<RollSequence> feasible_sequences(Point s);

/// True when the source lies on a face diagonal (|s1| = |s2| within 1e-9).
bool on_diagonal(Point s);

struct RegionSet {
  Point source;
  std::array<std::pair<RollSequence, ConvexPolygon>, 8> polygons;  // four_face_sequences() order
  double union_area = 0.0;
  double probability = 0.0;  // union_area / 4

  const ConvexPolygon& polygon(const RollSequence& seq4) const;
  std::vector<RollSequence> nonempty() const;
};

RegionSet region_set(Point s);

/// Area of the union of convex polygons by inclusion-exclusion.
double union_area(const std::vector<ConvexPolygon>& polys);

/// For a source on a face diagonal, checks at `samples` evenly spaced open
/// points of that diagonal that a 3-face path (RR or LL in the canonical
/// frame) is strictly shorter than every feasible 4-face path.
bool diagonal_exclusion_check(Point s_on_diagonal, int samples = 201);

}  // namespace cubepath
