#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cubepath/unfolding.hpp"

namespace cubepath {

/// Shortest path between interior points of opposite faces.
struct SolveResult {
  double length = 0.0;
  double length_sq = 0.0;
  std::vector<RollSequence> minimizers;  // table order
  int faces = 0;                         // fewest faces among minimizers
  std::vector<int> face_counts;          // distinct face counts, ascending
  std::array<PathCandidate, 12> candidates;
  bool minimizers_ls = true;  // every minimizer re-checked as an LS path
};

/// Throws DomainError unless both coordinates are finite and strictly inside
/// (-1, 1) by more than 1e-9.
void require_interior(Point p, const char* what);
bool is_interior(Point p);

SolveResult solve(Point s, Point t);

/// Bit i set when canonical sequence i ties the minimum squared length
/// within 1e-12. Pure formula evaluation; accepts boundary points.
std::uint16_t minimizer_mask(Point s, Point t);

/// Mask bits belonging to the 3-roll (4-face) sequences.
std::uint16_t four_face_mask();

/// True when some minimizer is a 4-face sequence (ties with 3-face
/// sequences count). Formula only; accepts boundary points.
bool has_four_face_minimizer(Point s, Point t);

/// Checked variant of has_four_face_minimizer for interior points.
bool is_4fsp(Point s, Point t);

}  // namespace cubepath
