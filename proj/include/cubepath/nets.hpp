#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubepath/cube_pose.hpp"

namespace cubepath {

struct Cell {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Cells of a polyomino in canonical form: translated so the minimum x and y
/// are 0, sorted, and lexicographically least over the 8 congruences.
using Polyomino = std::vector<Cell>;

Polyomino canonical_form(const Polyomino& cells);

/// Edge of the face-adjacency graph (faces are indices of Face).
using FaceEdge = std::pair<int, int>;

/// The 12 pairs of faces sharing a cube edge.
std::vector<FaceEdge> face_adjacency();

/// Lays out the faces of a spanning tree by rolling the cube across the tree
/// edges, starting with the bottom face on cell (0, 0).
Polyomino unfold_tree(const std::vector<FaceEdge>& tree);

struct NetEnumeration {
  int tree_count = 0;
  int class_count = 0;
  std::vector<Polyomino> representatives;  // sorted canonical forms
};

NetEnumeration enumerate_nets();

/// Rows from the top, '#' for cells and '.' for gaps.
std::string ascii_art(const Polyomino& cells);

}  // namespace cubepath
