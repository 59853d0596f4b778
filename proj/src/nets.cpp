#include "cubepath/nets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cubepath/symmetry.hpp"

namespace cubepath {

namespace {

constexpr int kFaces = 6;

bool opposite(Face a, Face b) {
  auto pair_of = [](Face f) {
    switch (f) {
      case Face::Bottom:
      case Face::Top: return 0;
      case Face::Right:
      case Face::Left: return 1;
      case Face::Back:
      case Face::Front: return 2;
    }
    return -1;
  };
  return a != b && pair_of(a) == pair_of(b);
}

Polyomino normalized(Polyomino cells) {
  int min_x = cells.front().x, min_y = cells.front().y;
  for (const Cell& c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  for (Cell& c : cells) {
    c.x -= min_x;
    c.y -= min_y;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

struct DisjointSet {
  std::array<int, kFaces> parent;
  DisjointSet() { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Polyomino canonical_form(const Polyomino& cells) {
  if (cells.empty()) return {};
  Polyomino best;
  for (const Symmetry& g : square_symmetries()) {
    Polyomino img;
    img.reserve(cells.size());
    for (const Cell& c : cells) {
      img.push_back({g.xx * c.x + g.xy * c.y, g.yx * c.x + g.yy * c.y});
    }
    img = normalized(std::move(img));
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

std::vector<FaceEdge> face_adjacency() {
  std::vector<FaceEdge> edges;
  for (int a = 0; a < kFaces; ++a) {
    for (int b = a + 1; b < kFaces; ++b) {
      if (!opposite(static_cast<Face>(a), static_cast<Face>(b))) edges.emplace_back(a, b);
    }
  }
  return edges;
}

Polyomino unfold_tree(const std::vector<FaceEdge>& tree) {
  std::array<std::vector<int>, kFaces> adj;
  for (auto [a, b] : tree) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  Polyomino cells;
  std::array<bool, kFaces> seen{};
  std::function<void(const CubePose&)> visit = [&](const CubePose& pose) {
    const int here = static_cast<int>(pose.down_face());
    seen[here] = true;
    const Point c = pose.cell();
    cells.push_back({static_cast<int>(std::lround(c.x / 2.0)), static_cast<int>(std::lround(c.y / 2.0))});
    for (int next : adj[here]) {
      if (seen[next]) continue;
      for (Move m : {Move::R, Move::L, Move::U, Move::D}) {
        if (static_cast<int>(pose.facing(m)) == next) {
          visit(pose.rolled(m));
          break;
        }
      }
    }
  };
  visit(CubePose{});
  if (cells.size() != kFaces) throw std::invalid_argument("unfold_tree: not a spanning tree");
  return cells;
}

NetEnumeration enumerate_nets() {
  const auto edges = face_adjacency();
  const int m = static_cast<int>(edges.size());
  NetEnumeration result;
  std::set<Polyomino> classes;
  // Every 5-edge subset without a cycle spans the 6 faces.
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != kFaces - 1) continue;
    DisjointSet ds;
    std::vector<FaceEdge> tree;
    bool acyclic = true;
    for (int i = 0; i < m && acyclic; ++i) {
      if (mask & (1u << i)) {
        acyclic = ds.unite(edges[i].first, edges[i].second);
        tree.push_back(edges[i]);
      }
    }
    if (!acyclic) continue;
    ++result.tree_count;
    classes.insert(canonical_form(unfold_tree(tree)));
  }
  result.class_count = static_cast<int>(classes.size());
  result.representatives.assign(classes.begin(), classes.end());
  return result;
}

std::string ascii_art(const Polyomino& cells) {
  if (cells.empty()) return {};
  const Polyomino n = normalized(cells);
  int w = 0, h = 0;
  for (const Cell& c : n) {
    w = std::max(w, c.x + 1);
    h = std::max(h, c.y + 1);
  }
  std::string out;
  for (int y = h - 1; y >= 0; --y) {
    for (int x = 0; x < w; ++x) {
      out.push_back(std::binary_search(n.begin(), n.end(), Cell{x, y}) ? '#' : '.');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace cubepath
