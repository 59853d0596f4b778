#pragma once

#include <array>
#include <limits>
#include <vector>

#include "cubepath/cube_pose.hpp"
#include "cubepath/unfolding.hpp"

namespace cubepath {

/// Exhaustive search over roll sequences, independent of the closed-form
/// tables: images come from rolling a rigid cube, and only LS candidates
/// take part in the minimum.
struct OracleResult {
  double best_length_sq = std::numeric_limits<double>::infinity();
  std::vector<RollSequence> best_sequences;
  bool ls_only = true;
  // Shortest LS candidate per roll count (index = rolls); infinity if none.
  std::array<double, RollSequence::kMaxRolls + 1> best_by_rolls;
};

/// Sequences of 1..5 rolls after which the target face rests on the plane,
/// shortest first, then lexicographic.
struct TargetDownSequence {
  RollSequence sequence;
  CubePose pose;
  UnfoldingStrip strip;
};
const std::vector<TargetDownSequence>& target_down_sequences();

OracleResult brute_force_solve(Point s, Point t, int max_rolls = 5);

struct GridSample {
  long long count_4fsp = 0;
  long long total = 0;
  std::vector<Point> mask;  // targets with a 4-face shortest path
};

/// Runs solve() on the cell centers -1 + (i + 1/2) h of a target grid.
GridSample grid_region_sample(Point s, double h);

}  // namespace cubepath
