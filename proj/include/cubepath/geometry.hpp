#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace cubepath {

// Tolerances shared by every module. Predicates on region boundaries use
// kGeomTol, algebraic identities (ties, round trips) use kAlgebraTol.
inline constexpr double kGeomTol = 1e-9;
inline constexpr double kAlgebraTol = 1e-12;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegenerateAngle : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A location in the unfolding-grid plane. Units are half an edge, so the
/// base face is [-1,1]^2.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double k, Point p) { return {k * p.x, k * p.y}; }
  friend constexpr bool operator==(Point, Point) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
constexpr double norm_sq(Point p) { return dot(p, p); }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
constexpr double distance_sq(Point a, Point b) { return norm_sq(a - b); }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

enum class Turn { Ccw, Cw };  // +90 and -90 degrees

/// Quarter turn of `p` about `pivot`.
constexpr Point rotate_about(Point p, Point pivot, Turn turn) {
  const double a = pivot.x;
  const double b = pivot.y;
  if (turn == Turn::Ccw) return {b + a - p.y, b - a + p.x};
  return {a - b + p.y, a + b - p.x};
}

constexpr Turn inverse(Turn t) { return t == Turn::Ccw ? Turn::Cw : Turn::Ccw; }

/// A vertical (x = c) or horizontal (y = c) mirror line.
struct Axis {
  enum class Kind { Vertical, Horizontal };
  Kind kind;
  double c;

  static constexpr Axis vertical(double c) { return {Kind::Vertical, c}; }
  static constexpr Axis horizontal(double c) { return {Kind::Horizontal, c}; }
};

constexpr Point reflect_axis(Point p, Axis axis) {
  if (axis.kind == Axis::Kind::Vertical) return {2.0 * axis.c - p.x, p.y};
  return {p.x, 2.0 * axis.c - p.y};
}

/// Interior angle at `vertex` between the rays towards `a` and `b`, in
/// degrees. Throws DegenerateAngle when either ray has zero length.
double angle_deg(Point vertex, Point a, Point b);

/// The inequality alpha*x + beta*y < gamma. When alpha and beta both vanish
/// the set is either the whole plane (gamma > 0) or empty.
struct HalfPlane {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  bool degenerate() const { return alpha == 0.0 && beta == 0.0; }
  double normal_length() const { return std::hypot(alpha, beta); }

  // alpha*x + beta*y - gamma; negative inside.
  double value(Point p) const { return alpha * p.x + beta * p.y - gamma; }

  // Signed Euclidean distance to the boundary line, negative inside.
  double signed_distance(Point p) const { return value(p) / normal_length(); }

  bool contains_strictly(Point p, double margin = kGeomTol) const;

  // Any point on the boundary line (the foot of the perpendicular from the
  // origin). Requires a non-degenerate half-plane.
  Point boundary_point() const;
};

/// Convex polygon with counterclockwise vertices. An empty vertex list is the
/// empty set; fewer than three vertices never survive construction.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  // Drops consecutive duplicates (closer than 1e-12) and collapses anything
  // with fewer than three distinct vertices to the empty polygon. Throws
  // std::invalid_argument if the result is not convex and counterclockwise.
  explicit ConvexPolygon(std::vector<Point> vertices);

  static ConvexPolygon axis_box(double x0, double y0, double x1, double y1);

  const std::vector<Point>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }

  bool contains_strictly(Point p, double margin = kGeomTol) const;
  bool contains(Point p, double tol = kGeomTol) const;
  Point centroid() const;

 private:
  struct Unchecked {};
  ConvexPolygon(std::vector<Point> vertices, Unchecked);

  friend ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& h);

  std::vector<Point> vertices_;
};

/// Base face of the unfolding grid.
ConvexPolygon base_face();

/// Intersection of `poly` with the closed half-plane alpha*x + beta*y <= gamma.
/// Degenerate half-planes keep everything when gamma > 0 and nothing otherwise.
ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& h);

/// Intersection of two convex polygons.
ConvexPolygon intersect(const ConvexPolygon& a, const ConvexPolygon& b);

/// Shoelace area; 0 for empty polygons.
double area(const ConvexPolygon& poly);

/// Smallest distance from `p` to the closed segment [a, b].
double segment_point_distance(Point a, Point b, Point p);

}  // namespace cubepath
