#include "cubepath/cube_pose.hpp"

namespace cubepath {

namespace {

using Mat = std::array<std::array<int, 3>, 3>;

Mat multiply(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Quarter turn about a horizontal axis that tips the top of the cube towards m.
Mat tip_towards(Move m) {
  switch (m) {
    case Move::R: return {{{0, 0, 1}, {0, 1, 0}, {-1, 0, 0}}};   // (x,z) -> (z,-x)
    case Move::L: return {{{0, 0, -1}, {0, 1, 0}, {1, 0, 0}}};   // (x,z) -> (-z,x)
    case Move::U: return {{{1, 0, 0}, {0, 0, 1}, {0, -1, 0}}};   // (y,z) -> (z,-y)
    case Move::D: return {{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}};   // (y,z) -> (-z,y)
  }
  return {};
}

constexpr std::array<std::pair<Face, std::array<int, 3>>, 6> kNormals = {{
    {Face::Bottom, {0, 0, -1}},
    {Face::Top, {0, 0, 1}},
    {Face::Right, {1, 0, 0}},
    {Face::Left, {-1, 0, 0}},
    {Face::Back, {0, 1, 0}},
    {Face::Front, {0, -1, 0}},
}};

}  // namespace

std::string_view to_string(Face f) {
  switch (f) {
    case Face::Bottom: return "bottom";
    case Face::Top: return "top";
    case Face::Right: return "right";
    case Face::Left: return "left";
    case Face::Back: return "back";
    case Face::Front: return "front";
  }
  return "?";
}

Vec3 CubePose::to_world(Vec3 b) const {
  const double body[3] = {b.x, b.y, b.z};
  double w[3];
  for (int i = 0; i < 3; ++i) {
    w[i] = shift_[i];
    for (int k = 0; k < 3; ++k) w[i] += rot_[i][k] * body[k];
  }
  return {w[0], w[1], w[2]};
}

Point CubePose::cell() const {
  const Vec3 c = to_world({0.0, 0.0, 1.0});
  return {c.x, c.y};
}

CubePose CubePose::rolled(Move m) const {
  const Point c = cell();
  const Point dir = direction(m);
  // The pivot edge lies on the footprint boundary in direction m, at z = 0.
  const double pivot[3] = {c.x + dir.x, c.y + dir.y, 0.0};
  const Mat turn = tip_towards(m);

  CubePose out;
  out.rot_ = multiply(turn, rot_);
  for (int i = 0; i < 3; ++i) {
    double v = pivot[i];
    for (int k = 0; k < 3; ++k) v += turn[i][k] * (shift_[k] - pivot[k]);
    out.shift_[i] = v;
  }
  return out;
}

CubePose CubePose::rolled(const RollSequence& seq) const {
  CubePose p = *this;
  for (Move m : seq.moves()) p = p.rolled(m);
  return p;
}

Face CubePose::facing(Move m) const {
  const Point d = direction(m);
  const int want[3] = {static_cast<int>(d.x), static_cast<int>(d.y), 0};
  for (const auto& [face, n] : kNormals) {
    bool match = true;
    for (int i = 0; i < 3 && match; ++i) {
      int w = 0;
      for (int k = 0; k < 3; ++k) w += rot_[i][k] * n[k];
      match = w == want[i];
    }
    if (match) return face;
  }
  return Face::Bottom;  // unreachable for a proper rotation
}

Face CubePose::down_face() const {
  for (const auto& [face, n] : kNormals) {
    int wz = 0;
    for (int k = 0; k < 3; ++k) wz += rot_[2][k] * n[k];
    if (wz == -1) return face;
  }
  return Face::Bottom;
}

Point CubePose::target_image(Point t) const {
  const Vec3 w = to_world({t.x, t.y, 2.0});
  return {w.x, w.y};
}

}  // namespace cubepath
