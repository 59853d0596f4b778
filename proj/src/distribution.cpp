#include "cubepath/distribution.hpp"

#include <cmath>
#include <stdexcept>

#include "cubepath/regions.hpp"
#include "cubepath/solver.hpp"

namespace cubepath {

double probability(Point s) { return region_set(s).probability; }

double estimate_probability(Point s, double h) {
  if (!(h > 0.0 && h <= 0.1)) throw std::invalid_argument("estimate_probability: pitch must be in (0, 0.1]");
  if (!is_finite(s) || std::abs(s.x) > 1.0 || std::abs(s.y) > 1.0) {
    throw DomainError("estimate_probability: source outside the face");
  }
  // Same point count as a -1:h:1 range; coordinates from the integer index
  // so no error accumulates along a row.
  const int steps = static_cast<int>(std::floor(2.0 / h + 1e-9));
  long long hits = 0;
  for (int j = 0; j <= steps; ++j) {
    const double y = -1.0 + j * h;
    for (int i = 0; i <= steps; ++i) {
      if (has_four_face_minimizer(s, {-1.0 + i * h, y})) ++hits;
    }
  }
  const double total = static_cast<double>(steps + 1) * (steps + 1);
  return static_cast<double>(hits) / total;
}

double lattice_coordinate(int n, int i) { return -1.0 + (2.0 * i + 1.0) / n; }

ProbabilityGrid heatmap(int n, SamplingMode mode, unsigned threads) {
  if (n < 3) throw std::invalid_argument("heatmap: n must be at least 3");
  ProbabilityGrid g;
  g.n = n;
  g.mode = mode;
  const std::size_t count = static_cast<std::size_t>(n) * n;
  g.coords.resize(count);
  g.values.resize(count);
  for (int i2 = 0; i2 < n; ++i2) {
    for (int i1 = 0; i1 < n; ++i1) {
      g.coords[static_cast<std::size_t>(i2) * n + i1] = {lattice_coordinate(n, i1), lattice_coordinate(n, i2)};
    }
  }
  parallel_for(count, threads, [&](std::size_t k) {
    g.values[k] = mode.kind == SamplingMode::Kind::Exact ? probability(g.coords[k])
                                                         : estimate_probability(g.coords[k], mode.pitch);
  });
  return g;
}

}  // namespace cubepath
