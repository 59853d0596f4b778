#include "cubepath/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "cubepath/solver.hpp"

namespace cubepath {

const std::vector<TargetDownSequence>& target_down_sequences() {
  static const std::vector<TargetDownSequence> kSeqs = [] {
    std::vector<TargetDownSequence> out;
    std::vector<std::pair<RollSequence, CubePose>> frontier = {{RollSequence{}, CubePose{}}};
    for (std::size_t len = 1; len <= RollSequence::kMaxRolls; ++len) {
      std::vector<std::pair<RollSequence, CubePose>> next;
      for (const auto& [seq, pose] : frontier) {
        for (Move m : {Move::D, Move::L, Move::R, Move::U}) {
          RollSequence s = seq.appended(m);
          CubePose p = pose.rolled(m);
          if (p.down_face() == Face::Top) out.push_back({s, p, strip_of(s)});
          next.emplace_back(s, p);
        }
      }
      frontier = std::move(next);
    }
    return out;
  }();
  return kSeqs;
}

OracleResult brute_force_solve(Point s, Point t, int max_rolls) {
  require_interior(s, "source");
  require_interior(t, "target");
  if (max_rolls < 1 || max_rolls > static_cast<int>(RollSequence::kMaxRolls)) {
    throw std::invalid_argument("brute_force_solve: max_rolls must be in [1, 5]");
  }
  OracleResult r;
  r.best_by_rolls.fill(std::numeric_limits<double>::infinity());

  struct Scored {
    const RollSequence* seq;
    double length_sq;
  };
  std::vector<Scored> ls;
  for (const TargetDownSequence& entry : target_down_sequences()) {
    const int rolls = static_cast<int>(entry.sequence.size());
    if (rolls > max_rolls) break;
    const Point image = entry.pose.target_image(t);
    if (classify_segment(s, image, entry.strip).kind != PathClass::LS) continue;
    const double d = distance_sq(s, image);
    ls.push_back({&entry.sequence, d});
    r.best_by_rolls[rolls] = std::min(r.best_by_rolls[rolls], d);
    r.best_length_sq = std::min(r.best_length_sq, d);
  }
  if (ls.empty()) throw std::logic_error("brute_force_solve: no LS candidate found");
  for (const Scored& c : ls) {
    if (c.length_sq - r.best_length_sq <= kAlgebraTol) r.best_sequences.push_back(*c.seq);
  }
  return r;
}

GridSample grid_region_sample(Point s, double h) {
  if (!(h > 0.0 && h <= 0.1)) throw std::invalid_argument("grid_region_sample: pitch must be in (0, 0.1]");
  const int cells = static_cast<int>(std::floor(2.0 / h + 1e-9));
  const double pitch = 2.0 / cells;
  GridSample g;
  for (int j = 0; j < cells; ++j) {
    for (int i = 0; i < cells; ++i) {
      const Point t{-1.0 + (i + 0.5) * pitch, -1.0 + (j + 0.5) * pitch};
      const SolveResult r = solve(s, t);
      ++g.total;
      if (r.face_counts.back() == 4) {
        ++g.count_4fsp;
        g.mask.push_back(t);
      }
    }
  }
  return g;
}

}  // namespace cubepath
