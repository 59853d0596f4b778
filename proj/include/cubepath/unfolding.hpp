#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cubepath/geometry.hpp"
#include "cubepath/symmetry.hpp"

namespace cubepath {

enum class Move : std::uint8_t { R, L, U, D };

char to_char(Move m);
Point direction(Move m);  // unit step in the grid, e.g. R -> (1, 0)
Move move_towards(Point dir);  // inverse of direction() for unit axis vectors
Move apply(const Symmetry& g, Move m);

class UnsupportedSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A word over {R, L, U, D} describing edge rolls of the cube, at most five
/// long. Two-roll words are 3-face paths, three-roll words 4-face paths.
class RollSequence {
 public:
  static constexpr std::size_t kMaxRolls = 5;

  constexpr RollSequence() = default;
  RollSequence(std::initializer_list<Move> moves);

  /// Parses e.g. "RUR". Throws std::invalid_argument on bad letters or length.
  static RollSequence parse(std::string_view text);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Move operator[](std::size_t i) const { return moves_[i]; }
  std::span<const Move> moves() const { return {moves_.data(), size_}; }

  // Number of cube faces a path along this sequence traverses.
  int faces() const { return static_cast<int>(size_) + 1; }

  RollSequence appended(Move m) const;
  std::string to_string() const;

  friend bool operator==(const RollSequence& a, const RollSequence& b) {
    return a.size_ == b.size_ && std::equal(a.moves().begin(), a.moves().end(), b.moves().begin());
  }
  friend auto operator<=>(const RollSequence& a, const RollSequence& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  std::array<Move, kMaxRolls> moves_{};
  std::size_t size_ = 0;
};

/// Letters of the sequence mapped through a square symmetry.
RollSequence apply(const Symmetry& g, const RollSequence& seq);

/// The twelve opposite-face sequences in table order:
/// RR RUR RDR LL LUL LDL UU URU ULU DD DRD DLD.
const std::array<RollSequence, 12>& canonical_sequences();
std::optional<std::size_t> canonical_index(const RollSequence& seq);
bool is_canonical(const RollSequence& seq);

/// The four 2-roll sequences RR LL UU DD, and the eight 3-roll sequences.
std::span<const RollSequence> three_face_sequences();
std::span<const RollSequence> four_face_sequences();

// Unfolded images of the target point for each canonical sequence.
Point image_of_target(Point t, const RollSequence& seq);

/// Squared path length for a canonical sequence, from the closed-form
/// distance table (not via image_of_target).
double squared_length(Point s, Point t, const RollSequence& seq);

/// All twelve squared lengths, indexed like canonical_sequences().
std::array<double, 12> squared_lengths(Point s, Point t);

/// Mirror line that produces the image of a 2-roll sequence.
Axis reflection_line(const RollSequence& seq3);

/// How a 3-roll image arises from its 2-roll sibling's image: a quarter turn
/// about a lattice vertex of the grid.
struct CornerMove {
  RollSequence sibling;  // e.g. RR for RUR
  Point pivot;
  Turn turn;
};
CornerMove corner_move_of(const RollSequence& seq4);

Point corner_move_image(Point image, Point pivot, Turn turn);

/// Decision angle at `pivot` between source and target image, degrees.
/// A corner move about `pivot` shortens the path iff it exceeds 135.
double decision_angle(Point s, Point pivot, Point image);

/// Axis-aligned 2x2 squares visited by rolling from the base face.
struct UnfoldingStrip {
  std::vector<Point> centers;  // base face first, one per roll after it

  std::size_t size() const { return centers.size(); }
  ConvexPolygon square(std::size_t i) const;
};

UnfoldingStrip strip_of(const RollSequence& seq);

enum class PathClass { LS, Pseudo };
std::string_view to_string(PathClass c);

struct Classification {
  PathClass kind = PathClass::Pseudo;
  std::optional<int> faces;  // set only for LS paths
};

/// Segment-in-strip test for an arbitrary target image: LS iff the segment
/// runs through the squares in order, crossing from each to the next, and
/// keeps more than 1e-9 away from every square corner.
Classification classify_segment(Point s, Point image, const UnfoldingStrip& strip);

Classification classify_path(Point s, Point t, const RollSequence& seq);

struct PathCandidate {
  Point source;
  Point target;
  RollSequence sequence;
  Point image;
  double length_sq = 0.0;
  PathClass classification = PathClass::Pseudo;
  int faces = 0;  // faces a path along the sequence would traverse
};

PathCandidate make_candidate(Point s, Point t, const RollSequence& seq);

}  // namespace cubepath
