#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "cubepath/solver.hpp"
#include "cubepath/symmetry.hpp"
#include "test_support.hpp"

namespace cubepath {
namespace {

using testing::interior_point;

std::vector<RollSequence> seqs(std::initializer_list<const char*> names) {
  std::vector<RollSequence> out;
  for (const char* n : names) out.push_back(RollSequence::parse(n));
  return out;
}

TEST(Solve, CenterToCenterIsAFourWayTie) {
  const SolveResult r = solve({0, 0}, {0, 0});
  EXPECT_DOUBLE_EQ(r.length, 4.0);
  EXPECT_DOUBLE_EQ(r.length_sq, 16.0);
  EXPECT_EQ(r.minimizers, seqs({"RR", "LL", "UU", "DD"}));
  EXPECT_EQ(r.faces, 3);
  EXPECT_EQ(r.face_counts, std::vector<int>{3});
}

TEST(Solve, DudeneyPositions) {
  // A foot from the edges of a 12 ft face, scaled to edge 2: both UU and DD
  // give (4 + 0)^2.
  const SolveResult r = solve({0, -5.0 / 6.0}, {0, 5.0 / 6.0});
  EXPECT_NEAR(r.length, 4.0, 1e-12);
  EXPECT_EQ(r.faces, 3);
  EXPECT_EQ(r.minimizers, seqs({"UU", "DD"}));
}

TEST(Solve, FourFaceWitness) {
  const Point s{0, -0.9}, t{0.98, -0.8};
  const SolveResult r = solve(s, t);
  EXPECT_EQ(r.minimizers, seqs({"DRD"}));
  EXPECT_EQ(r.faces, 4);
  EXPECT_NEAR(r.length_sq, 5.9344, 1e-9);
  EXPECT_NEAR(r.length, std::sqrt(r.length_sq), 1e-12);
  EXPECT_TRUE(is_4fsp(s, t));
  // Independent values: |s - image|^2 with images from Table 1.
  auto d2 = [&](Point img) { return distance_sq(s, img); };
  EXPECT_NEAR(d2({2 + t.y, -4 + t.x}), 5.9344, 1e-12);   // DRD
  EXPECT_NEAR(d2({t.x, -4 - t.y}), 6.2504, 1e-12);       // DD
  EXPECT_NEAR(d2({4 - t.x, t.y}), 9.1304, 1e-12);        // RR
  EXPECT_NEAR(d2({-4 - t.x, t.y}), 24.8104, 1e-12);      // LL
  EXPECT_NEAR(d2({t.x, 4 - t.y}), 33.4504, 1e-12);       // UU
  EXPECT_NEAR(r.candidates[*canonical_index(RollSequence::parse("DD"))].length_sq, 6.2504, 1e-12);
}

TEST(Solve, RejectsPointsOutsideTheOpenFace) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(solve({2, 0}, {0, 0}), DomainError);
  EXPECT_THROW(solve({0, 0}, {1, 0}), DomainError);
  EXPECT_THROW(solve({-1, 0.5}, {0, 0}), DomainError);
  EXPECT_THROW(solve({nan, 0}, {0, 0}), DomainError);
  EXPECT_THROW(solve({0, 0}, {0, INFINITY}), DomainError);
  EXPECT_THROW(solve({0, 1 - 1e-10}, {0, 0}), DomainError);
  EXPECT_NO_THROW(solve({0, 1 - 1e-8}, {0, 0}));
  EXPECT_THROW(is_4fsp({1, 1}, {0, 0}), DomainError);
  EXPECT_NO_THROW(has_four_face_minimizer({1, 1}, {0, 0}));
}

TEST(Solve, CentroidHasOnlyThreeFacePaths) {
  for (int i = 0; i < 2000; ++i) {
    const Point p = interior_point();
    for (const SolveResult& r : {solve({0, 0}, p), solve(p, {0, 0})}) {
      EXPECT_EQ(r.faces, 3);
      EXPECT_EQ(r.face_counts, std::vector<int>{3});
    }
  }
}

TEST(Solve, CandidatesAndMinimizersAreConsistent) {
  for (int i = 0; i < 2000; ++i) {
    const Point s = interior_point(), t = interior_point();
    const SolveResult r = solve(s, t);
    double best = INFINITY;
    for (std::size_t k = 0; k < 12; ++k) {
      EXPECT_EQ(r.candidates[k].sequence, canonical_sequences()[k]);
      best = std::min(best, r.candidates[k].length_sq);
    }
    EXPECT_EQ(r.length_sq, best);
    EXPECT_NEAR(r.length, std::sqrt(r.length_sq), 1e-12);
    EXPECT_TRUE(r.faces == 3 || r.faces == 4);
    const std::uint16_t mask = minimizer_mask(s, t);
    std::size_t bits = 0;
    for (std::size_t k = 0; k < 12; ++k) bits += (mask >> k) & 1u;
    EXPECT_EQ(bits, r.minimizers.size());
    EXPECT_EQ(is_4fsp(s, t), (mask & four_face_mask()) != 0);
  }
}

TEST(Solve, MinimizerIsNeverAPseudopath) {
  for (int i = 0; i < 100000; ++i) {
    const Point s = interior_point(), t = interior_point();
    const SolveResult r = solve(s, t);
    ASSERT_TRUE(r.minimizers_ls) << s.x << "," << s.y << " " << t.x << "," << t.y;
    for (const RollSequence& m : r.minimizers) {
      ASSERT_EQ(r.candidates[*canonical_index(m)].classification, PathClass::LS);
    }
  }
}

TEST(Solve, SymmetricUnderSquareSymmetriesAndReversal) {
  for (int i = 0; i < 2000; ++i) {
    const Point s = interior_point(), t = interior_point();
    const SolveResult r = solve(s, t);
    for (const Symmetry& g : square_symmetries()) {
      const SolveResult rg = solve(g.apply(s), g.apply(t));
      EXPECT_NEAR(rg.length, r.length, 1e-12);
      EXPECT_EQ(rg.faces, r.faces);
    }
    EXPECT_NEAR(solve(t, s).length, r.length, 1e-12);
  }
}

TEST(Solve, FourFaceMaskCoversThreeRollSequences) {
  const std::uint16_t m = four_face_mask();
  for (std::size_t k = 0; k < 12; ++k) EXPECT_EQ(((m >> k) & 1u) != 0, canonical_sequences()[k].size() == 3);
}

}  // namespace
}  // namespace cubepath
