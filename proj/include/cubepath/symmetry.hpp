#pragma once

#include <array>

#include "cubepath/geometry.hpp"

namespace cubepath {

/// An element of the symmetry group of the square, stored as a signed
/// permutation matrix [[xx, xy], [yx, yy]] acting on column vectors.
struct Symmetry {
  int xx = 1;
  int xy = 0;
  int yx = 0;
  int yy = 1;

  constexpr Point apply(Point p) const {
    return {xx * p.x + xy * p.y, yx * p.x + yy * p.y};
  }

  // Orthogonal, so the inverse is the transpose.
  constexpr Symmetry inverse() const { return {xx, yx, xy, yy}; }

  friend constexpr bool operator==(const Symmetry&, const Symmetry&) = default;
};

constexpr Symmetry compose(const Symmetry& a, const Symmetry& b) {
  // (a * b)(p) = a(b(p))
  return {a.xx * b.xx + a.xy * b.yx, a.xx * b.xy + a.xy * b.yy,
          a.yx * b.xx + a.yy * b.yx, a.yx * b.xy + a.yy * b.yy};
}

/// The 8 symmetries, identity first.
const std::array<Symmetry, 8>& square_symmetries();

/// A symmetry g with g(s) in the closed canonical triangle
/// -1 <= y <= x <= 0, i.e. the triangle with vertices (0,0), (0,-1), (-1,-1).
Symmetry to_canonical_triangle(Point s);

bool in_canonical_triangle(Point s, double tol = 0.0);

}  // namespace cubepath
