#include "cubepath/unfolding.hpp"

#include <cmath>
#include <fmt/format.h>

namespace cubepath {

namespace {

constexpr std::size_t kRR = 0, kRUR = 1, kRDR = 2, kLL = 3, kLUL = 4, kLDL = 5,
                      kUU = 6, kURU = 7, kULU = 8, kDD = 9, kDRD = 10, kDLD = 11;

std::size_t require_canonical(const RollSequence& seq) {
  if (auto idx = canonical_index(seq)) return *idx;
  throw UnsupportedSequence(fmt::format("'{}' is not one of the twelve opposite-face roll sequences",
                                        seq.to_string()));
}

// Parameter interval [lo, hi] of s + u*d (u in [0,1]) inside the closed box.
// Returns false when empty.
bool box_interval(Point s, Point d, Point center, double& lo, double& hi) {
  lo = 0.0;
  hi = 1.0;
  const double mins[2] = {center.x - 1.0, center.y - 1.0};
  const double maxs[2] = {center.x + 1.0, center.y + 1.0};
  const double org[2] = {s.x, s.y};
  const double dir[2] = {d.x, d.y};
  for (int k = 0; k < 2; ++k) {
    if (dir[k] == 0.0) {
      if (org[k] < mins[k] || org[k] > maxs[k]) return false;
      continue;
    }
    double u0 = (mins[k] - org[k]) / dir[k];
    double u1 = (maxs[k] - org[k]) / dir[k];
    if (u0 > u1) std::swap(u0, u1);
    lo = std::max(lo, u0);
    hi = std::min(hi, u1);
    if (lo > hi) return false;
  }
  return true;
}

}  // namespace

char to_char(Move m) {
  switch (m) {
    case Move::R: return 'R';
    case Move::L: return 'L';
    case Move::U: return 'U';
    case Move::D: return 'D';
  }
  return '?';
}

Point direction(Move m) {
  switch (m) {
    case Move::R: return {1.0, 0.0};
    case Move::L: return {-1.0, 0.0};
    case Move::U: return {0.0, 1.0};
    case Move::D: return {0.0, -1.0};
  }
  return {};
}

Move move_towards(Point dir) {
  if (dir.x > 0.5) return Move::R;
  if (dir.x < -0.5) return Move::L;
  if (dir.y > 0.5) return Move::U;
  return Move::D;
}

Move apply(const Symmetry& g, Move m) { return move_towards(g.apply(direction(m))); }

RollSequence::RollSequence(std::initializer_list<Move> moves) {
  if (moves.size() > kMaxRolls) throw std::invalid_argument("RollSequence: more than 5 rolls");
  for (Move m : moves) moves_[size_++] = m;
}

RollSequence RollSequence::parse(std::string_view text) {
  if (text.size() > kMaxRolls) {
    throw std::invalid_argument(fmt::format("roll sequence '{}' is longer than 5", text));
  }
  RollSequence seq;
  for (char c : text) {
    switch (c) {
      case 'R': seq.moves_[seq.size_++] = Move::R; break;
      case 'L': seq.moves_[seq.size_++] = Move::L; break;
      case 'U': seq.moves_[seq.size_++] = Move::U; break;
      case 'D': seq.moves_[seq.size_++] = Move::D; break;
      default:
        throw std::invalid_argument(fmt::format("roll sequence '{}': unknown move '{}'", text, c));
    }
  }
  return seq;
}

RollSequence RollSequence::appended(Move m) const {
  if (size_ == kMaxRolls) throw std::invalid_argument("RollSequence: more than 5 rolls");
  RollSequence out = *this;
  out.moves_[out.size_++] = m;
  return out;
}

std::string RollSequence::to_string() const {
  std::string s;
  for (Move m : moves()) s.push_back(to_char(m));
  return s;
}

RollSequence apply(const Symmetry& g, const RollSequence& seq) {
  RollSequence out;
  for (Move m : seq.moves()) out = out.appended(apply(g, m));
  return out;
}

const std::array<RollSequence, 12>& canonical_sequences() {
  using enum Move;
  static const std::array<RollSequence, 12> kAll = {{
      {R, R}, {R, U, R}, {R, D, R},
      {L, L}, {L, U, L}, {L, D, L},
      {U, U}, {U, R, U}, {U, L, U},
      {D, D}, {D, R, D}, {D, L, D},
  }};
  return kAll;
}

std::optional<std::size_t> canonical_index(const RollSequence& seq) {
  const auto& all = canonical_sequences();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] == seq) return i;
  }
  return std::nullopt;
}

bool is_canonical(const RollSequence& seq) { return canonical_index(seq).has_value(); }

std::span<const RollSequence> three_face_sequences() {
  static const std::array<RollSequence, 4> kSeqs = {
      canonical_sequences()[kRR], canonical_sequences()[kLL],
      canonical_sequences()[kUU], canonical_sequences()[kDD]};
  return kSeqs;
}

std::span<const RollSequence> four_face_sequences() {
  static const std::array<RollSequence, 8> kSeqs = {
      canonical_sequences()[kRUR], canonical_sequences()[kRDR],
      canonical_sequences()[kLUL], canonical_sequences()[kLDL],
      canonical_sequences()[kURU], canonical_sequences()[kULU],
      canonical_sequences()[kDRD], canonical_sequences()[kDLD]};
  return kSeqs;
}

Point image_of_target(Point t, const RollSequence& seq) {
  const double t1 = t.x;
  const double t2 = t.y;
  switch (require_canonical(seq)) {
    case kRR:  return {4 - t1, t2};
    case kRUR: return {4 - t2, 2 - t1};
    case kRDR: return {4 + t2, -2 + t1};
    case kLL:  return {-4 - t1, t2};
    case kLUL: return {-4 + t2, 2 + t1};
    case kLDL: return {-4 - t2, -2 - t1};
    case kUU:  return {t1, 4 - t2};
    case kURU: return {2 - t2, 4 - t1};
    case kULU: return {-2 + t2, 4 + t1};
    case kDD:  return {t1, -4 - t2};
    case kDRD: return {2 + t2, -4 + t1};
    case kDLD: return {-2 - t2, -4 - t1};
  }
  throw UnsupportedSequence(seq.to_string());
}

std::array<double, 12> squared_lengths(Point s, Point t) {
  const double s1 = s.x, s2 = s.y, x = t.x, y = t.y;
  auto sq = [](double v) { return v * v; };
  std::array<double, 12> d;
  d[kRR] = sq(x + s1 - 4) + sq(y - s2);
  d[kRUR] = sq(y + s1 - 4) + sq(x + s2 - 2);
  d[kRDR] = sq(y - s1 + 4) + sq(x - s2 - 2);
  d[kLL] = sq(x + s1 + 4) + sq(y - s2);
  d[kLUL] = sq(y - s1 - 4) + sq(x - s2 + 2);
  d[kLDL] = sq(y + s1 + 4) + sq(x + s2 + 2);
  d[kUU] = sq(x - s1) + sq(y + s2 - 4);
  d[kURU] = sq(y + s1 - 2) + sq(x + s2 - 4);
  d[kULU] = sq(y - s1 - 2) + sq(x - s2 + 4);
  d[kDD] = sq(x - s1) + sq(y + s2 + 4);
  d[kDRD] = sq(y - s1 + 2) + sq(x - s2 - 4);
  d[kDLD] = sq(y + s1 + 2) + sq(x + s2 + 4);
  return d;
}

double squared_length(Point s, Point t, const RollSequence& seq) {
  return squared_lengths(s, t)[require_canonical(seq)];
}

Axis reflection_line(const RollSequence& seq3) {
  switch (require_canonical(seq3)) {
    case kRR: return Axis::vertical(2.0);
    case kLL: return Axis::vertical(-2.0);
    case kUU: return Axis::horizontal(2.0);
    case kDD: return Axis::horizontal(-2.0);
    default: break;
  }
  throw UnsupportedSequence(fmt::format("'{}' is not a 2-roll sequence", seq3.to_string()));
}

CornerMove corner_move_of(const RollSequence& seq4) {
  const auto& c = canonical_sequences();
  switch (require_canonical(seq4)) {
    case kRUR: return {c[kRR], {3, 1}, Turn::Ccw};
    case kRDR: return {c[kRR], {3, -1}, Turn::Cw};
    case kLUL: return {c[kLL], {-3, 1}, Turn::Cw};
    case kLDL: return {c[kLL], {-3, -1}, Turn::Ccw};
    case kURU: return {c[kUU], {1, 3}, Turn::Cw};
    case kULU: return {c[kUU], {-1, 3}, Turn::Ccw};
    case kDRD: return {c[kDD], {1, -3}, Turn::Ccw};
    case kDLD: return {c[kDD], {-1, -3}, Turn::Cw};
    default: break;
  }
  throw UnsupportedSequence(fmt::format("'{}' is not a 3-roll sequence", seq4.to_string()));
}

Point corner_move_image(Point image, Point pivot, Turn turn) {
  return rotate_about(image, pivot, turn);
}

double decision_angle(Point s, Point pivot, Point image) { return angle_deg(pivot, s, image); }

ConvexPolygon UnfoldingStrip::square(std::size_t i) const {
  const Point c = centers.at(i);
  return ConvexPolygon::axis_box(c.x - 1.0, c.y - 1.0, c.x + 1.0, c.y + 1.0);
}

UnfoldingStrip strip_of(const RollSequence& seq) {
  UnfoldingStrip strip;
  strip.centers.reserve(seq.size() + 1);
  Point c{0.0, 0.0};
  strip.centers.push_back(c);
  for (Move m : seq.moves()) {
    c = c + 2.0 * direction(m);
    strip.centers.push_back(c);
  }
  return strip;
}

std::string_view to_string(PathClass c) { return c == PathClass::LS ? "LS" : "PSEUDO"; }

Classification classify_segment(Point s, Point image, const UnfoldingStrip& strip) {
  const Point d = image - s;
  const std::size_t n = strip.size();

  double prev_hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double lo = 0.0, hi = 0.0;
    if (!box_interval(s, d, strip.centers[i], lo, hi)) return {};
    if (hi - lo <= kAlgebraTol) return {};
    // Each square must pick up exactly where the previous one left off.
    const double expected_lo = i == 0 ? 0.0 : prev_hi;
    if (std::abs(lo - expected_lo) > kAlgebraTol) return {};
    prev_hi = hi;
  }
  if (std::abs(prev_hi - 1.0) > kAlgebraTol) return {};

  for (const Point& c : strip.centers) {
    for (double dx : {-1.0, 1.0}) {
      for (double dy : {-1.0, 1.0}) {
        if (segment_point_distance(s, image, {c.x + dx, c.y + dy}) <= kGeomTol) return {};
      }
    }
  }
  return {PathClass::LS, static_cast<int>(n)};
}

Classification classify_path(Point s, Point t, const RollSequence& seq) {
  return classify_segment(s, image_of_target(t, seq), strip_of(seq));
}

PathCandidate make_candidate(Point s, Point t, const RollSequence& seq) {
  PathCandidate c;
  c.source = s;
  c.target = t;
  c.sequence = seq;
  c.image = image_of_target(t, seq);
  c.length_sq = squared_length(s, t, seq);
  c.classification = classify_segment(s, c.image, strip_of(seq)).kind;
  c.faces = seq.faces();
  return c;
}

}  // namespace cubepath
