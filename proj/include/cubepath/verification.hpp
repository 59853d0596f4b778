#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cubepath/geometry.hpp"
#include "cubepath/parallel.hpp"

namespace cubepath::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  unsigned threads = default_threads();
  std::uint64_t seed = 0x5eed'c0be;
  // Where the heatmap suite writes its CSV and SVG; nothing is written when unset.
  std::optional<std::filesystem::path> artifact_dir;
};

/// Uniform point strictly inside the face (margin 1e-9).
Point random_interior(std::mt19937_64& rng);

// Acceptance checks. Sample counts default to the required ones.
CheckResult oracle_equivalence(const Options& opt, int pairs = 10'000);
CheckResult centroid_rule(const Options& opt, int grid = 201);
CheckResult dudeney_on_cube(const Options& opt);
CheckResult four_face_witness(const Options& opt);
CheckResult feasible_regions(const Options& opt, int sources = 1000, int hypotenuse_sources = 100,
                                int diagonal_samples = 201);
CheckResult corner_anchoring(const Options& opt, int sources = 1000, int diagonal_sources = 100);
CheckResult exact_vs_sampled(const Options& opt, int sources = 100, double pitch = 0.005);
CheckResult halfplane_anchors(const Options& opt, int sources = 1000);
CheckResult net_enumeration(const Options& opt);
CheckResult heatmap_properties(const Options& opt, int n = 101);

// Further invariants exercised by `verify`.
CheckResult region_solver_agreement(const Options& opt, int pairs = 1000);
CheckResult symmetry_and_reversal(const Options& opt, int pairs = 1000);
CheckResult corner_move_monotonicity(const Options& opt, int samples = 10'000);
CheckResult pseudopaths_never_win(const Options& opt, int pairs = 10'000);

/// Spanning trees of the face-adjacency graph by the matrix-tree theorem.
long long spanning_tree_count_by_determinant();

struct Suite {
  std::string name;
  std::string description;
  std::function<CheckResult(const Options&)> run;
};

/// Acceptance suites first (in criterion order), then the extra invariants.
const std::vector<Suite>& suites();
const std::vector<Suite>& acceptance_suites();

}  // namespace cubepath::verify
