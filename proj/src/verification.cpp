#include "cubepath/verification.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>

#include <fmt/format.h>

#include "cubepath/distribution.hpp"
#include "cubepath/export.hpp"
#include "cubepath/nets.hpp"
#include "cubepath/oracle.hpp"
#include "cubepath/regions.hpp"
#include "cubepath/solver.hpp"
#include "cubepath/symmetry.hpp"
#include "cubepath/unfolding.hpp"

namespace cubepath::verify {

namespace {

constexpr double kMargin = 1e-9;

// Collects the first failure message from worker threads.
class FirstFailure {
 public:
  void report(std::string msg) {
    std::lock_guard lock(mutex_);
    ++count_;
    if (first_.empty()) first_ = std::move(msg);
  }
  bool ok() const { return count_ == 0; }
  long long count() const { return count_; }
  const std::string& first() const { return first_; }

 private:
  std::mutex mutex_;
  long long count_ = 0;
  std::string first_;
};

template <typename Fn>
CheckResult timed(std::string name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.name = std::move(name);
  try {
    fn(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = fmt::format("exception: {}", e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void finish(CheckResult& r, const FirstFailure& f, std::string summary) {
  r.passed = f.ok();
  r.detail = f.ok() ? std::move(summary) : fmt::format("{} failures; first: {}", f.count(), f.first());
}

std::vector<Point> random_points(std::mt19937_64& rng, int count) {
  std::vector<Point> pts(count);
  for (Point& p : pts) p = random_interior(rng);
  return pts;
}

std::string pt(Point p) { return fmt::format("({}, {})", format12(p.x), format12(p.y)); }

std::string names(const std::vector<RollSequence>& seqs) {
  std::string out;
  for (const RollSequence& s : seqs) out += (out.empty() ? "" : " ") + s.to_string();
  return "{" + out + "}";
}

bool subset(const std::vector<RollSequence>& a, const std::vector<RollSequence>& b) {
  return std::all_of(a.begin(), a.end(), [&](const RollSequence& s) {
    return std::find(b.begin(), b.end(), s) != b.end();
  });
}

constexpr std::array<Point, 4> kCorners = {Point{1, 1}, Point{-1, 1}, Point{-1, -1}, Point{1, -1}};

// Base-face corners that some polygon vertex lies within 1e-9 of.
std::vector<int> anchored_corners(const ConvexPolygon& poly) {
  std::vector<int> out;
  for (int c = 0; c < 4; ++c) {
    for (const Point& v : poly.vertices()) {
      if (distance(v, kCorners[c]) <= kMargin) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

int sign(double v) { return (v > 0) - (v < 0); }

// Index of a lattice coordinate of an n-point heatmap grid.
int lattice_index(int n, double x) { return static_cast<int>(std::lround(((x + 1.0) * n - 1.0) / 2.0)); }

}  // namespace

Point random_interior(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0 + 2 * kMargin, 1.0 - 2 * kMargin);
  return {u(rng), u(rng)};
}

CheckResult oracle_equivalence(const Options& opt, int pairs) {
  return timed("oracle-equivalence", [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed);
    const auto src = random_points(rng, pairs);
    const auto dst = random_points(rng, pairs);
    FirstFailure fail;
    parallel_for(pairs, opt.threads, [&](std::size_t i) {
      const SolveResult fast = solve(src[i], dst[i]);
      const OracleResult slow = brute_force_solve(src[i], dst[i], 5);
      const double best_short = std::min(slow.best_by_rolls[2], slow.best_by_rolls[3]);
      const double best_long = std::min(slow.best_by_rolls[4], slow.best_by_rolls[5]);
      if (std::abs(fast.length_sq - slow.best_length_sq) > kAlgebraTol) {
        fail.report(fmt::format("s={} t={}: solve {} vs oracle {}", pt(src[i]), pt(dst[i]),
                                format12(fast.length_sq), format12(slow.best_length_sq)));
      } else if (!fast.minimizers_ls) {
        fail.report(fmt::format("s={} t={}: a minimizer is not LS", pt(src[i]), pt(dst[i])));
      } else if (best_long < best_short - kAlgebraTol) {
        fail.report(fmt::format("s={} t={}: 4/5-roll candidate {} beats {}", pt(src[i]), pt(dst[i]),
                                format12(best_long), format12(best_short)));
      }
    });
    finish(r, fail, fmt::format("{} pairs agree; no 5- or 6-face path is shorter", pairs));
  });
}

CheckResult centroid_rule(const Options& opt, int grid) {
  return timed("centroid-rule", [&](CheckResult& r) {
    const Point s{0.0, 0.0};
    std::atomic<long long> hits{0};
    parallel_for(static_cast<std::size_t>(grid) * grid, opt.threads, [&](std::size_t k) {
      const Point t{lattice_coordinate(grid, static_cast<int>(k % grid)),
                    lattice_coordinate(grid, static_cast<int>(k / grid))};
      if (is_4fsp(s, t)) ++hits;
    });
    const double a = region_set(s).union_area;
    r.passed = hits == 0 && a == 0.0;
    r.detail = fmt::format("{}x{} targets, {} with a 4-face shortest path; union_area {}", grid, grid,
                           hits.load(), format12(a));
  });
}

CheckResult dudeney_on_cube(const Options&) {
  return timed("dudeney", [&](CheckResult& r) {
    const SolveResult res = solve({0.0, -5.0 / 6.0}, {0.0, 5.0 / 6.0});
    r.passed = std::abs(res.length - 4.0) <= kAlgebraTol && res.faces == 3;
    r.detail = fmt::format("length {:.17g}, faces {}, minimizers {}", res.length, res.faces, names(res.minimizers));
  });
}

CheckResult four_face_witness(const Options&) {
  return timed("four-face-witness", [&](CheckResult& r) {
    const SolveResult res = solve({0.0, -0.9}, {0.98, -0.8});
    const bool drd_only = res.minimizers == std::vector<RollSequence>{RollSequence::parse("DRD")};
    r.passed = drd_only && res.faces == 4 && std::abs(res.length_sq - 5.9344) <= kGeomTol;
    r.detail = fmt::format("length_sq {:.15g}, faces {}, minimizers {}", res.length_sq, res.faces,
                           names(res.minimizers));
  });
}

CheckResult feasible_regions(const Options& opt, int sources, int hypotenuse_sources, int diagonal_samples) {
  return timed("feasible-regions", [&](CheckResult& r) {
    const std::vector<RollSequence> generic = {RollSequence::parse("RUR"), RollSequence::parse("DRD"),
                                               RollSequence::parse("DLD"), RollSequence::parse("LUL")};
    const std::vector<RollSequence> hypotenuse = {RollSequence::parse("DRD"), RollSequence::parse("LUL")};
    std::mt19937_64 rng(opt.seed + 5);
    const auto src = random_points(rng, sources);
    std::uniform_real_distribution<double> along(-1.0 + 2 * kMargin, -kMargin);
    std::vector<Point> diag(hypotenuse_sources);
    for (Point& p : diag) p.x = p.y = along(rng);

    FirstFailure fail;
    parallel_for(src.size(), opt.threads, [&](std::size_t i) {
      const Point c = to_canonical_triangle(src[i]).apply(src[i]);
      const auto in_triangle = region_set(c).nonempty();
      if (!subset(in_triangle, generic)) {
        fail.report(fmt::format("canonical s={}: regions {}", pt(c), names(in_triangle)));
      }
      const auto original = region_set(src[i]).nonempty();
      if (!subset(original, feasible_sequences(src[i]))) {
        fail.report(fmt::format("s={}: regions {} not within feasible {}", pt(src[i]), names(original),
                                names(feasible_sequences(src[i]))));
      }
    });
    parallel_for(diag.size(), opt.threads, [&](std::size_t i) {
      const auto found = region_set(diag[i]).nonempty();
      if (!subset(found, hypotenuse)) {
        fail.report(fmt::format("hypotenuse s={}: regions {}", pt(diag[i]), names(found)));
      }
      if (!diagonal_exclusion_check(diag[i], diagonal_samples)) {
        fail.report(fmt::format("hypotenuse s={}: a diagonal target has a 4-face path", pt(diag[i])));
      }
    });
    finish(r, fail,
           fmt::format("{} sources within {}, {} hypotenuse sources within {} ({} diagonal targets each)", sources,
                       names(generic), hypotenuse_sources, names(hypotenuse), diagonal_samples));
  });
}

CheckResult corner_anchoring(const Options& opt, int sources, int diagonal_sources) {
  return timed("corner-anchoring", [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 6);
    std::vector<Point> off;
    while (static_cast<int>(off.size()) < sources) {
      const Point p = random_interior(rng);
      if (std::abs(std::abs(p.x) - std::abs(p.y)) > 1e-6) off.push_back(p);
    }
    std::vector<Point> on;
    std::uniform_real_distribution<double> u(-1.0 + 2 * kMargin, 1.0 - 2 * kMargin);
    std::bernoulli_distribution flip;
    while (static_cast<int>(on.size()) < diagonal_sources) {
      const double k = u(rng);
      if (std::abs(k) <= 1e-6) continue;
      on.push_back({k, flip(rng) ? k : -k});
    }

    FirstFailure fail;
    parallel_for(off.size(), opt.threads, [&](std::size_t i) {
      const RegionSet rs = region_set(off[i]);
      std::vector<int> used;
      int nonempty = 0;
      for (const auto& [seq, poly] : rs.polygons) {
        if (poly.empty()) continue;
        ++nonempty;
        const auto corners = anchored_corners(poly);
        if (corners.size() != 1) {
          fail.report(fmt::format("s={}: {} touches {} corners", pt(off[i]), seq.to_string(), corners.size()));
          return;
        }
        used.push_back(corners.front());
      }
      std::sort(used.begin(), used.end());
      const bool distinct = std::adjacent_find(used.begin(), used.end()) == used.end();
      if (nonempty != 4 || !distinct) {
        fail.report(fmt::format("s={}: {} nonempty regions, distinct corners {}", pt(off[i]), nonempty, distinct));
      }
    });
    parallel_for(on.size(), opt.threads, [&](std::size_t i) {
      const RegionSet rs = region_set(on[i]);
      int nonempty = 0;
      for (const auto& [seq, poly] : rs.polygons) {
        if (poly.empty()) continue;
        ++nonempty;
        const auto corners = anchored_corners(poly);
        if (corners.size() != 1 ||
            sign(kCorners[corners.front()].x * kCorners[corners.front()].y) == sign(on[i].x * on[i].y)) {
          fail.report(fmt::format("diagonal s={}: {} not anchored at an off-diagonal corner", pt(on[i]),
                                  seq.to_string()));
        }
      }
      if (nonempty != 2) fail.report(fmt::format("diagonal s={}: {} nonempty regions", pt(on[i]), nonempty));
    });
    finish(r, fail,
           fmt::format("{} off-diagonal sources with 4 corner-anchored regions, {} diagonal sources with 2", sources,
                       diagonal_sources));
  });
}

CheckResult exact_vs_sampled(const Options& opt, int sources, double pitch) {
  return timed("exact-vs-sampled", [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 7);
    const auto src = random_points(rng, sources);
    std::vector<double> gap(src.size());
    parallel_for(src.size(), opt.threads,
                 [&](std::size_t i) { gap[i] = std::abs(probability(src[i]) - estimate_probability(src[i], pitch)); });
    const auto worst = std::max_element(gap.begin(), gap.end());
    const std::size_t at = static_cast<std::size_t>(worst - gap.begin());
    r.passed = *worst <= 0.01;
    r.detail = fmt::format("{} sources, pitch {}, max |exact - sampled| {} at s={}", sources, pitch,
                           format12(*worst), pt(src[at]));
  });
}

CheckResult halfplane_anchors(const Options& opt, int sources) {
  return timed("halfplane-anchors", [&](CheckResult& r) {
    const RollSequence ulu = RollSequence::parse("ULU");
    const RollSequence dld = RollSequence::parse("DLD");
    const RollSequence ll = RollSequence::parse("LL");
    std::mt19937_64 rng(opt.seed + 8);
    const auto src = random_points(rng, sources);

    // The boundary normal must be parallel to (num, -den), the normal of a
    // line with slope num/den.
    auto slope_matches = [](const HalfPlane& h, double num, double den) {
      const double c = h.alpha * (-den) - h.beta * num;
      return std::abs(c) <= 1e-9 * h.normal_length() * std::hypot(num, den);
    };

    FirstFailure fail;
    for (const Point& s : src) {
      const HalfPlane a = halfplane_for(ulu, ll, s);
      const HalfPlane b = halfplane_for(dld, ll, s);
      if (std::abs(a.signed_distance({-3, 1})) > kMargin) {
        fail.report(fmt::format("s={}: ULU/LL boundary misses (-3,1) by {}", pt(s), a.signed_distance({-3, 1})));
      }
      if (std::abs(b.signed_distance({-3, -1})) > kMargin) {
        fail.report(fmt::format("s={}: DLD/LL boundary misses (-3,-1) by {}", pt(s), b.signed_distance({-3, -1})));
      }
      if (!slope_matches(a, s.x + s.y, s.y - s.x - 2)) {
        fail.report(fmt::format("s={}: ULU/LL slope differs from (s1+s2)/(s2-s1-2)", pt(s)));
      }
      if (!slope_matches(b, s.x - s.y, s.x + s.y + 2)) {
        fail.report(fmt::format("s={}: DLD/LL slope differs from (s1-s2)/(s1+s2+2)", pt(s)));
      }
      const Point c = to_canonical_triangle(s).apply(s);
      for (auto [h, label] : {std::pair{halfplane_for(ulu, ll, c), "ULU/LL"}, {halfplane_for(dld, ll, c), "DLD/LL"}}) {
        const double slope = -h.alpha / h.beta;
        if (!(slope >= -1e-12)) fail.report(fmt::format("canonical s={}: {} slope {}", pt(c), label, slope));
      }
    }
    finish(r, fail,
           fmt::format("{} sources: lines through (-3,1) and (-3,-1), slopes match and are nonnegative in the "
                       "canonical triangle",
                       sources));
  });
}

long long spanning_tree_count_by_determinant() {
  // Faces by outward normal; two faces share an edge iff their normals are
  // perpendicular.
  constexpr std::array<std::array<int, 3>, 6> normals = {
      {{0, 0, -1}, {0, 0, 1}, {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}}};
  std::array<std::array<double, 6>, 6> lap{};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i == j) continue;
      const int d = normals[i][0] * normals[j][0] + normals[i][1] * normals[j][1] + normals[i][2] * normals[j][2];
      if (d == 0) {
        lap[i][j] = -1;
        lap[i][i] += 1;
      }
    }
  }
  // Matrix-tree theorem: any cofactor of the Laplacian. Drop row/column 0.
  constexpr int n = 5;
  std::array<std::array<double, n>, n> m{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = lap[i + 1][j + 1];
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
    if (m[piv][col] == 0.0) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < n; ++row) {
      const double f = m[row][col] / m[col][col];
      for (int k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return std::llround(det);
}

CheckResult net_enumeration(const Options&) {
  return timed("net-enumeration", [&](CheckResult& r) {
    const NetEnumeration nets = enumerate_nets();
    const long long det = spanning_tree_count_by_determinant();
    const bool six_cells = std::all_of(nets.representatives.begin(), nets.representatives.end(),
                                       [](const Polyomino& p) { return p.size() == 6; });
    r.passed = nets.tree_count == 384 && det == 384 && nets.class_count == 11 && six_cells;
    r.detail = fmt::format("{} spanning trees (matrix-tree theorem: {}), {} congruence classes", nets.tree_count, det,
                           nets.class_count);
  });
}

CheckResult heatmap_properties(const Options& opt, int n) {
  return timed("heatmap", [&](CheckResult& r) {
    const ProbabilityGrid g = heatmap(n, SamplingMode::exact(), opt.threads);
    double worst_sym = 0.0;
    for (int i2 = 0; i2 < n; ++i2) {
      for (int i1 = 0; i1 < n; ++i1) {
        for (const Symmetry& s : square_symmetries()) {
          const Point q = s.apply(g.coord(i1, i2));
          worst_sym = std::max(worst_sym, std::abs(g.at(i1, i2) - g.at(lattice_index(n, q.x), lattice_index(n, q.y))));
        }
      }
    }
    const double peak = *std::max_element(g.values.begin(), g.values.end());
    int peaks = 0, peaks_on_diagonal = 0;
    double diagonal_peak = 0.0;
    for (int i2 = 0; i2 < n; ++i2) {
      for (int i1 = 0; i1 < n; ++i1) {
        const bool diagonal = on_diagonal(g.coord(i1, i2));
        if (diagonal) diagonal_peak = std::max(diagonal_peak, g.at(i1, i2));
        if (peak - g.at(i1, i2) <= kGeomTol) {
          ++peaks;
          peaks_on_diagonal += diagonal;
        }
      }
    }

    std::string center = "n/a (even n)";
    bool center_ok = true;
    if (n % 2 == 1) {
      const double c = g.at(n / 2, n / 2);
      center = format12(c);
      center_ok = c == 0.0;
    }

    std::string written = "exports rendered in memory";
    std::ostringstream csv;
    write_heatmap_csv(csv, g);
    const std::string svg = heatmap_svg(g);
    bool export_ok = !csv.str().empty() && !svg.empty();
    if (opt.artifact_dir) {
      std::filesystem::create_directories(*opt.artifact_dir);
      const auto csv_path = *opt.artifact_dir / "heatmap.csv";
      const auto svg_path = *opt.artifact_dir / "heatmap.svg";
      std::ofstream(csv_path) << csv.str();
      std::ofstream(svg_path) << svg;
      export_ok = export_ok && std::filesystem::file_size(csv_path) > 0 && std::filesystem::file_size(svg_path) > 0;
      written = fmt::format("wrote {} and {}", csv_path.string(), svg_path.string());
    }

    r.passed = worst_sym <= kGeomTol && center_ok && peaks_on_diagonal == 0 && diagonal_peak < peak && export_ok;
    r.detail = fmt::format(
        "{}x{} exact: max symmetry gap {:.3g}, center {}, max {} at {} points ({} on a diagonal, diagonal max {}); {}",
        n, n, worst_sym, center, format12(peak), peaks, peaks_on_diagonal, format12(diagonal_peak), written);
  });
}

CheckResult region_solver_agreement(const Options& opt, int pairs) {
  return timed("region-solver-agreement", [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 11);
    const auto src = random_points(rng, pairs);
    const auto dst = random_points(rng, pairs);
    FirstFailure fail;
    std::atomic<long long> inside{0}, skipped{0};
    parallel_for(src.size(), opt.threads, [&](std::size_t i) {
      const RegionSet rs = region_set(src[i]);
      bool strictly_in = false, near_boundary = false;
      for (const auto& [seq, poly] : rs.polygons) {
        if (poly.empty()) continue;
        if (poly.contains_strictly(dst[i], kMargin)) strictly_in = true;
        else if (poly.contains(dst[i], kMargin)) near_boundary = true;
      }
      if (!strictly_in && near_boundary) {
        ++skipped;
        return;
      }
      inside += strictly_in;
      if (strictly_in != is_4fsp(src[i], dst[i])) {
        fail.report(fmt::format("s={} t={}: region says {}, solver says {}", pt(src[i]), pt(dst[i]), strictly_in,
                                !strictly_in));
      }
    });
    finish(r, fail,
           fmt::format("{} pairs ({} inside a region, {} within 1e-9 of a boundary skipped)", pairs, inside.load(),
                       skipped.load()));
  });
}

CheckResult symmetry_and_reversal(const Options& opt, int pairs) {
  return timed("symmetry-reversal", [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 12);
    const auto src = random_points(rng, pairs);
    const auto dst = random_points(rng, pairs);
    FirstFailure fail;
    parallel_for(src.size(), opt.threads, [&](std::size_t i) {
      const Point s = src[i], t = dst[i];
      const SolveResult base = solve(s, t);
      for (const Symmetry& g : square_symmetries()) {
        const SolveResult img = solve(g.apply(s), g.apply(t));
        if (std::abs(img.length - base.length) > kAlgebraTol) {
          fail.report(fmt::format("s={} t={}: length changes under a square symmetry", pt(s), pt(t)));
        }
        for (const RollSequence& seq : canonical_sequences()) {
          const double d = squared_length(g.apply(s), g.apply(t), apply(g, seq)) - squared_length(s, t, seq);
          if (std::abs(d) > kAlgebraTol) {
            fail.report(fmt::format("s={} t={}: {} not equivariant", pt(s), pt(t), seq.to_string()));
          }
        }
      }
      if (std::abs(solve(t, s).length - base.length) > kAlgebraTol) {
        fail.report(fmt::format("s={} t={}: reversed length differs", pt(s), pt(t)));
      }
    });
    finish(r, fail, fmt::format("{} pairs invariant under 8 symmetries and reversal", pairs));
  });
}

CheckResult corner_move_monotonicity(const Options& opt, int samples) {
  return timed("corner-move-monotonicity", [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 13);
    const auto src = random_points(rng, samples);
    const auto dst = random_points(rng, samples);
    FirstFailure fail;
    std::atomic<long long> shorter{0};
    parallel_for(src.size(), opt.threads, [&](std::size_t i) {
      for (const RollSequence& seq4 : four_face_sequences()) {
        const CornerMove cm = corner_move_of(seq4);
        const Point before = image_of_target(dst[i], cm.sibling);
        const Point after = corner_move_image(before, cm.pivot, cm.turn);
        const double angle = decision_angle(src[i], cm.pivot, before);
        const double d0 = distance(src[i], before), d1 = distance(src[i], after);
        const bool ok = std::abs(angle - 135.0) < 1e-9 ? std::abs(d1 - d0) <= 1e-9
                        : angle > 135.0               ? d1 < d0
                                                      : d1 > d0;
        shorter += d1 < d0;
        if (!ok) {
          fail.report(fmt::format("s={} t={} {}: angle {} but distance {} -> {}", pt(src[i]), pt(dst[i]),
                                  seq4.to_string(), format12(angle), format12(d0), format12(d1)));
        }
      }
    });
    finish(r, fail,
           fmt::format("{} corner moves follow the 135 degree rule ({} shorten the path)", 8LL * samples,
                       shorter.load()));
  });
}

CheckResult pseudopaths_never_win(const Options& opt, int pairs) {
  return timed("pseudopaths", [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 14);
    const auto src = random_points(rng, pairs);
    const auto dst = random_points(rng, pairs);
    FirstFailure fail;
    std::atomic<long long> pseudo{0};
    parallel_for(src.size(), opt.threads, [&](std::size_t i) {
      const SolveResult res = solve(src[i], dst[i]);
      double best_ls = std::numeric_limits<double>::infinity();
      for (const PathCandidate& c : res.candidates) {
        if (c.classification == PathClass::LS) best_ls = std::min(best_ls, c.length_sq);
      }
      for (const PathCandidate& c : res.candidates) {
        if (c.classification != PathClass::Pseudo) continue;
        ++pseudo;
        if (!(best_ls < c.length_sq)) {
          fail.report(fmt::format("s={} t={}: pseudopath {} at {} not beaten by an LS path", pt(src[i]), pt(dst[i]),
                                  c.sequence.to_string(), format12(c.length_sq)));
        }
      }
      if (!res.minimizers_ls) fail.report(fmt::format("s={} t={}: PSEUDO minimizer", pt(src[i]), pt(dst[i])));
    });
    finish(r, fail,
           fmt::format("{} pairs, {} pseudopaths, each strictly longer than the best LS path", pairs, pseudo.load()));
  });
}

const std::vector<Suite>& acceptance_suites() {
  static const std::vector<Suite> kSuites = {
      {"oracle-equivalence", "solve() matches exhaustive rolling up to 5 rolls",
       [](const Options& o) { return oracle_equivalence(o); }},
      {"centroid-rule", "a source at the center never has a 4-face shortest path",
       [](const Options& o) { return centroid_rule(o); }},
      {"dudeney", "s=(0,-5/6), t=(0,5/6) has length 4 over 3 faces",
       [](const Options& o) { return dudeney_on_cube(o); }},
      {"four-face-witness", "s=(0,-0.9), t=(0.98,-0.8) is a DRD 4-face shortest path",
       [](const Options& o) { return four_face_witness(o); }},
      {"feasible-regions", "only RUR, DRD, DLD, LUL regions in the canonical triangle; DRD, LUL on its hypotenuse",
       [](const Options& o) { return feasible_regions(o); }},
      {"corner-anchoring", "each region is anchored at one corner of the face",
       [](const Options& o) { return corner_anchoring(o); }},
      {"exact-vs-sampled", "exact region areas agree with grid estimates",
       [](const Options& o) { return exact_vs_sampled(o); }},
      {"halfplane-anchors", "ULU/LL and DLD/LL boundaries pass through fixed points",
       [](const Options& o) { return halfplane_anchors(o); }},
      {"net-enumeration", "384 spanning trees, 11 nets", [](const Options& o) { return net_enumeration(o); }},
      {"heatmap", "exact 101x101 probability heatmap properties",
       [](const Options& o) { return heatmap_properties(o); }},
  };
  return kSuites;
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> kSuites = [] {
    std::vector<Suite> all = acceptance_suites();
    all.push_back({"region-solver-agreement", "region polygons match solver decisions",
                   [](const Options& o) { return region_solver_agreement(o); }});
    all.push_back({"symmetry-reversal", "lengths invariant under square symmetries and reversal",
                   [](const Options& o) { return symmetry_and_reversal(o); }});
    all.push_back({"corner-move-monotonicity", "corner moves shorten iff the decision angle exceeds 135",
                   [](const Options& o) { return corner_move_monotonicity(o); }});
    all.push_back({"pseudopaths", "pseudopaths are always beaten by an LS path",
                   [](const Options& o) { return pseudopaths_never_win(o); }});
    return all;
  }();
  return kSuites;
}

}  // namespace cubepath::verify
