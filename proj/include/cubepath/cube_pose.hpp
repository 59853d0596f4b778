#pragma once

#include <array>
#include <string_view>

#include "cubepath/unfolding.hpp"

namespace cubepath {

/// Faces of the cube in its starting orientation: the source face rests on
/// the base face, the target face is on top, "back" points towards +y.
enum class Face { Bottom, Top, Right, Left, Back, Front };

std::string_view to_string(Face f);

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
  friend constexpr bool operator==(Vec3, Vec3) = default;
};

/// Rigid placement of the cube [-1,1]^2 x [0,2] (body coordinates) on the
/// plane z = 0. Rolling tips the cube over one of its bottom edges, so the
/// pose always stays a lattice-aligned rotation plus translation.
class CubePose {
 public:
  CubePose() = default;

  CubePose rolled(Move m) const;
  CubePose rolled(const RollSequence& seq) const;

  Face down_face() const;
  Face facing(Move m) const;  // face whose outward normal points along m

  // Planar center of the footprint square.
  Point cell() const;

  Vec3 to_world(Vec3 body) const;

  /// Planar position of a point on the target face, given in top view
  /// coordinates. Only meaningful once the target face is down.
  Point target_image(Point t) const;

 private:
  // world = rot * body + shift
  std::array<std::array<int, 3>, 3> rot_{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  std::array<double, 3> shift_{0.0, 0.0, 0.0};
};

}  // namespace cubepath
