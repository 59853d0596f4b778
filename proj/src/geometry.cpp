#include "cubepath/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace cubepath {

namespace {

constexpr double kDuplicateTol = 1e-12;

std::vector<Point> drop_duplicates(std::vector<Point> pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    if (out.empty() || distance(out.back(), p) > kDuplicateTol) out.push_back(p);
  }
  while (out.size() > 1 && distance(out.front(), out.back()) <= kDuplicateTol) {
    out.pop_back();
  }
  if (out.size() < 3) out.clear();
  return out;
}

double signed_area(const std::vector<Point>& v) {
  double twice = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    twice += cross(v[i], v[(i + 1) % n]);
  }
  return 0.5 * twice;
}

}  // namespace

double angle_deg(Point vertex, Point a, Point b) {
  const Point u = a - vertex;
  const Point w = b - vertex;
  if (norm_sq(u) == 0.0 || norm_sq(w) == 0.0) {
    throw DegenerateAngle("angle_deg: ray endpoint coincides with the vertex");
  }
  // atan2 keeps full precision near 0 and 180 degrees, where acos does not.
  const double rad = std::atan2(std::abs(cross(u, w)), dot(u, w));
  return rad * 180.0 / std::numbers::pi;
}

bool HalfPlane::contains_strictly(Point p, double margin) const {
  if (degenerate()) return gamma > 0.0;
  return signed_distance(p) < -margin;
}

Point HalfPlane::boundary_point() const {
  const double n2 = alpha * alpha + beta * beta;
  return {alpha * gamma / n2, beta * gamma / n2};
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices)
    : vertices_(drop_duplicates(std::move(vertices))) {
  const std::size_t n = vertices_.size();
  if (n == 0) return;
  if (signed_area(vertices_) < 0.0) {
    throw std::invalid_argument("ConvexPolygon: vertices must be counterclockwise");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = vertices_[(i + 1) % n] - vertices_[i];
    const Point e1 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
    if (cross(e0, e1) < -kGeomTol * norm(e0) * norm(e1)) {
      throw std::invalid_argument("ConvexPolygon: vertices are not convex");
    }
  }
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices, Unchecked)
    : vertices_(drop_duplicates(std::move(vertices))) {}

ConvexPolygon ConvexPolygon::axis_box(double x0, double y0, double x1, double y1) {
  return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

bool ConvexPolygon::contains_strictly(Point p, double margin) const {
  const std::size_t n = vertices_.size();
  if (n == 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = vertices_[i];
    const Point e = vertices_[(i + 1) % n] - a;
    // Distance to the left of the edge line.
    if (cross(e, p - a) / norm(e) <= margin) return false;
  }
  return true;
}

bool ConvexPolygon::contains(Point p, double tol) const {
  const std::size_t n = vertices_.size();
  if (n == 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = vertices_[i];
    const Point e = vertices_[(i + 1) % n] - a;
    if (cross(e, p - a) / norm(e) < -tol) return false;
  }
  return true;
}

Point ConvexPolygon::centroid() const {
  const std::size_t n = vertices_.size();
  if (n == 0) return {};
  double a2 = 0.0;
  Point c{};
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = vertices_[i];
    const Point q = vertices_[(i + 1) % n];
    const double w = cross(p, q);
    a2 += w;
    c = c + w * (p + q);
  }
  if (a2 == 0.0) return vertices_.front();
  return (1.0 / (3.0 * a2)) * c;
}

ConvexPolygon base_face() { return ConvexPolygon::axis_box(-1.0, -1.0, 1.0, 1.0); }

ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& h) {
  if (poly.empty()) return {};
  if (h.degenerate()) return h.gamma > 0.0 ? poly : ConvexPolygon{};

  const auto& in = poly.vertices();
  const double scale = h.normal_length();
  const std::size_t n = in.size();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = h.value(in[i]) / scale;

  // Vertices within 1e-12 of the line count as on it, so clipping a polygon
  // that already touches the line adds no sliver vertices.
  std::vector<Point> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (d[i] <= kAlgebraTol) out.push_back(in[i]);
    if ((d[i] < -kAlgebraTol && d[j] > kAlgebraTol) || (d[i] > kAlgebraTol && d[j] < -kAlgebraTol)) {
      const double u = d[i] / (d[i] - d[j]);
      out.push_back(in[i] + u * (in[j] - in[i]));
    }
  }
  return ConvexPolygon(std::move(out), ConvexPolygon::Unchecked{});
}

ConvexPolygon intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
  ConvexPolygon result = a;
  const auto& v = b.vertices();
  const std::size_t n = v.size();
  if (n == 0) return {};
  for (std::size_t i = 0; i < n && !result.empty(); ++i) {
    const Point p = v[i];
    const Point e = v[(i + 1) % n] - p;
    // Left of the directed edge p -> p+e.
    result = clip(result, HalfPlane{e.y, -e.x, e.y * p.x - e.x * p.y});
  }
  return result;
}

double area(const ConvexPolygon& poly) {
  if (poly.empty()) return 0.0;
  return std::max(0.0, signed_area(poly.vertices()));
}

double segment_point_distance(Point a, Point b, Point p) {
  const Point ab = b - a;
  const double len2 = norm_sq(ab);
  if (len2 == 0.0) return distance(a, p);
  const double u = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(a + u * ab, p);
}

}  // namespace cubepath
