#include "cubepath/regions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "cubepath/solver.hpp"
#include "cubepath/symmetry.hpp"

namespace cubepath {

namespace {

// image(t) = A t + c for a canonical sequence; A is a signed permutation.
struct AffineImage {
  Point col_x;  // A e1
  Point col_y;  // A e2
  Point offset;
};

AffineImage affine_image(const RollSequence& seq) {
  const Point c = image_of_target({0.0, 0.0}, seq);
  return {image_of_target({1.0, 0.0}, seq) - c, image_of_target({0.0, 1.0}, seq) - c, c};
}

// A^T (s - c)
Point pulled_back(const AffineImage& m, Point s) {
  const Point r = s - m.offset;
  return {dot(m.col_x, r), dot(m.col_y, r)};
}

}  // namespace

HalfPlane halfplane_for(const RollSequence& seq4, const RollSequence& seq3, Point s) {
  // |s - A t - c|^2 = |t|^2 - 2 t.A^T(s - c) + |s - c|^2, so the difference of
  // two such lengths is linear in t.
  const AffineImage a4 = affine_image(seq4);
  const AffineImage a3 = affine_image(seq3);
  const Point n = 2.0 * (pulled_back(a3, s) - pulled_back(a4, s));
  const double gamma = distance_sq(s, a3.offset) - distance_sq(s, a4.offset);
  return {n.x, n.y, gamma};
}

ConvexPolygon region_polygon(Point s, const RollSequence& seq4) {
  require_interior(s, "source");
  if (seq4.size() != 3 || !is_canonical(seq4)) {
    throw UnsupportedSequence("region_polygon: expected a 3-roll sequence, got '" +
                              seq4.to_string() + "'");
  }
  ConvexPolygon poly = base_face();
  for (const RollSequence& seq3 : three_face_sequences()) {
    poly = clip(poly, halfplane_for(seq4, seq3, s));
    if (poly.empty()) break;
  }
  return poly;
}

bool on_diagonal(Point s) { return std::abs(std::abs(s.x) - std::abs(s.y)) <= kGeomTol; }

std::vector<RollSequence> feasible_sequences(Point s) {
  require_interior(s, "source");
  if (s.x == 0.0 && s.y == 0.0) return {};

  const Symmetry g = to_canonical_triangle(s);
  const Point c = g.apply(s);
  using enum Move;
  std::vector<RollSequence> canon;
  if (std::abs(c.x - c.y) <= kGeomTol) {
    canon = {{D, R, D}, {L, U, L}};
  } else {
    canon = {{R, U, R}, {D, R, D}, {D, L, D}, {L, U, L}};
  }
  const Symmetry back = g.inverse();
  std::vector<RollSequence> out;
  for (const RollSequence& seq : canon) out.push_back(apply(back, seq));
  std::sort(out.begin(), out.end(), [](const RollSequence& a, const RollSequence& b) {
    return *canonical_index(a) < *canonical_index(b);
  });
  return out;
}

const ConvexPolygon& RegionSet::polygon(const RollSequence& seq4) const {
  for (const auto& [seq, poly] : polygons) {
    if (seq == seq4) return poly;
  }
  throw UnsupportedSequence("RegionSet: no region for '" + seq4.to_string() + "'");
}

std::vector<RollSequence> RegionSet::nonempty() const {
  std::vector<RollSequence> out;
  for (const auto& [seq, poly] : polygons) {
    if (!poly.empty()) out.push_back(seq);
  }
  return out;
}

double union_area(const std::vector<ConvexPolygon>& polys) {
  const std::size_t n = polys.size();
  if (n > 16) throw std::invalid_argument("union_area: too many polygons");
  double total = 0.0;
  for (unsigned subset = 1; subset < (1u << n); ++subset) {
    ConvexPolygon common;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(subset & (1u << i))) continue;
      common = first ? polys[i] : intersect(common, polys[i]);
      first = false;
      if (common.empty()) break;
    }
    const double a = area(common);
    total += (std::popcount(subset) % 2 == 1) ? a : -a;
  }
  return std::clamp(total, 0.0, 4.0);
}

RegionSet region_set(Point s) {
  require_interior(s, "source");
  RegionSet r;
  r.source = s;
  std::vector<ConvexPolygon> nonempty;
  const auto seqs = four_face_sequences();
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    r.polygons[i] = {seqs[i], region_polygon(s, seqs[i])};
    if (!r.polygons[i].second.empty()) nonempty.push_back(r.polygons[i].second);
  }
  r.union_area = union_area(nonempty);
  r.probability = r.union_area / 4.0;
  return r;
}

bool diagonal_exclusion_check(Point s_on_diagonal, int samples) {
  require_interior(s_on_diagonal, "source");
  if (!on_diagonal(s_on_diagonal)) {
    throw DomainError("diagonal_exclusion_check: source is not on a face diagonal");
  }
  if (samples < 1) throw std::invalid_argument("diagonal_exclusion_check: samples must be >= 1");

  // Lengths are invariant under the square's symmetries, so work with the
  // source mapped onto the hypotenuse y = x of the canonical triangle.
  const Point c = to_canonical_triangle(s_on_diagonal).apply(s_on_diagonal);
  const Point s{c.x, c.x};
  using enum Move;
  const RollSequence rr{R, R}, ll{L, L};
  const std::vector<RollSequence> feasible = {{D, R, D}, {L, U, L}};
  for (int i = 0; i < samples; ++i) {
    const double x = -1.0 + 2.0 * (i + 1) / (samples + 1);
    const Point t{x, x};
    const double three = std::min(squared_length(s, t, rr), squared_length(s, t, ll));
    for (const RollSequence& seq : feasible) {
      if (!(three < squared_length(s, t, seq))) return false;
    }
  }
  return true;
}

}  // namespace cubepath
