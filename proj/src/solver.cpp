#include "cubepath/solver.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace cubepath {

namespace {

constexpr double kBoundaryMargin = 1e-9;

std::uint16_t mask_of(const std::array<double, 12>& d) {
  const double best = *std::min_element(d.begin(), d.end());
  std::uint16_t mask = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] - best <= kAlgebraTol) mask |= static_cast<std::uint16_t>(1u << i);
  }
  return mask;
}

}  // namespace

bool is_interior(Point p) {
  return is_finite(p) && std::abs(p.x) < 1.0 - kBoundaryMargin &&
         std::abs(p.y) < 1.0 - kBoundaryMargin;
}

void require_interior(Point p, const char* what) {
  if (!is_interior(p)) {
    throw DomainError(fmt::format("{} ({}, {}) is not strictly inside the face (-1,1)^2", what,
                                  p.x, p.y));
  }
}

std::uint16_t four_face_mask() {
  static const std::uint16_t mask = [] {
    std::uint16_t m = 0;
    const auto& all = canonical_sequences();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i].size() == 3) m |= static_cast<std::uint16_t>(1u << i);
    }
    return m;
  }();
  return mask;
}

std::uint16_t minimizer_mask(Point s, Point t) { return mask_of(squared_lengths(s, t)); }

bool has_four_face_minimizer(Point s, Point t) {
  return (minimizer_mask(s, t) & four_face_mask()) != 0;
}

bool is_4fsp(Point s, Point t) {
  require_interior(s, "source");
  require_interior(t, "target");
  return has_four_face_minimizer(s, t);
}

SolveResult solve(Point s, Point t) {
  require_interior(s, "source");
  require_interior(t, "target");

  SolveResult r;
  const auto& seqs = canonical_sequences();
  std::array<double, 12> d{};
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    r.candidates[i] = make_candidate(s, t, seqs[i]);
    d[i] = r.candidates[i].length_sq;
  }
  const std::uint16_t mask = mask_of(d);
  r.length_sq = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    const PathCandidate& c = r.candidates[i];
    r.minimizers.push_back(c.sequence);
    r.length_sq = std::min(r.length_sq, c.length_sq);
    if (c.classification != PathClass::LS) r.minimizers_ls = false;
    if (std::find(r.face_counts.begin(), r.face_counts.end(), c.faces) == r.face_counts.end()) {
      r.face_counts.push_back(c.faces);
    }
  }
  std::sort(r.face_counts.begin(), r.face_counts.end());
  r.faces = r.face_counts.front();
  r.length = std::sqrt(r.length_sq);
  return r;
}

}  // namespace cubepath
