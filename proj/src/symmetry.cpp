#include "cubepath/symmetry.hpp"

namespace cubepath {

const std::array<Symmetry, 8>& square_symmetries() {
  static const std::array<Symmetry, 8> kAll = {{
      {1, 0, 0, 1},    // identity
      {0, -1, 1, 0},   // +90
      {-1, 0, 0, -1},  // 180
      {0, 1, -1, 0},   // -90
      {-1, 0, 0, 1},   // mirror x -> -x
      {1, 0, 0, -1},   // mirror y -> -y
      {0, 1, 1, 0},    // mirror across y = x
      {0, -1, -1, 0},  // mirror across y = -x
  }};
  return kAll;
}

bool in_canonical_triangle(Point s, double tol) {
  return s.x <= tol && s.y <= s.x + tol && s.y >= -1.0 - tol;
}

Symmetry to_canonical_triangle(Point s) {
  // |x| <= |y| with y <= 0 and x <= 0 is the target; fold step by step.
  Symmetry g{};
  auto fold = [&](const Symmetry& m) {
    g = compose(m, g);
    s = m.apply(s);
  };
  if (s.y > 0.0) fold({1, 0, 0, -1});
  if (s.x > 0.0) fold({-1, 0, 0, 1});
  // Now in the third quadrant; the triangle is the half below y = x.
  if (s.y > s.x) fold({0, 1, 1, 0});
  return g;
}

}  // namespace cubepath
