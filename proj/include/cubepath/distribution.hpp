#pragma once

#include <vector>

#include "cubepath/geometry.hpp"
#include "cubepath/parallel.hpp"

namespace cubepath {

/// Probability that a uniformly random target has a 4-face shortest path
/// from `s`: exact union area of the endpoint regions over the face area.
double probability(Point s);

/// Grid estimate: the fraction of targets on the lattice -1, -1+h, ..., 1
/// (both axes, endpoints included) whose minimizer set contains a 4-face
/// sequence. Requires 0 < h <= 0.1.
double estimate_probability(Point s, double h);

/// Lattice coordinate i of an n-point grid over [-1+d, 1-d] with pitch 2/n
/// and d half the pitch.
double lattice_coordinate(int n, int i);

struct SamplingMode {
  enum class Kind { Exact, Sampled };
  Kind kind = Kind::Exact;
  double pitch = 0.01;  // used by Sampled only

  static SamplingMode exact() { return {}; }
  static SamplingMode sampled(double h) { return {Kind::Sampled, h}; }
};

/// Probabilities for an n x n lattice of source points, stored row-major
/// with s2 as the slow index.
struct ProbabilityGrid {
  int n = 0;
  SamplingMode mode;
  std::vector<Point> coords;
  std::vector<double> values;

  double at(int i1, int i2) const { return values[static_cast<std::size_t>(i2) * n + i1]; }
  Point coord(int i1, int i2) const { return coords[static_cast<std::size_t>(i2) * n + i1]; }
};

ProbabilityGrid heatmap(int n, SamplingMode mode, unsigned threads = default_threads());

}  // namespace cubepath
