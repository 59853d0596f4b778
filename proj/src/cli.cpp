#include "cubepath/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cubepath/distribution.hpp"
#include "cubepath/export.hpp"
#include "cubepath/nets.hpp"
#include "cubepath/regions.hpp"
#include "cubepath/solver.hpp"
#include "cubepath/verification.hpp"

namespace cubepath::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "x,y" with both parts fully consumed.
Point parse_point(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  auto number = [&](std::string_view part) {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || end != part.data() + part.size()) {
      throw UsageError(fmt::format("{}: expected x,y but got '{}'", flag, text));
    }
    return v;
  };
  if (comma == std::string::npos) throw UsageError(fmt::format("{}: expected x,y but got '{}'", flag, text));
  const std::string_view sv(text);
  return {number(sv.substr(0, comma)), number(sv.substr(comma + 1))};
}

// Writes to `path`, or to `out` when the path is "-".
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path));
  f << content;
}

std::vector<const verify::Suite*> select_suites(const std::vector<std::string>& requested) {
  const auto& all = verify::suites();
  std::vector<const verify::Suite*> picked;
  for (const std::string& item : requested) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      if (name == "all") {
        for (const auto& s : all) picked.push_back(&s);
        continue;
      }
      if (name == "acceptance") {
        for (const auto& s : verify::acceptance_suites()) {
          picked.push_back(&*std::find_if(all.begin(), all.end(), [&](const auto& x) { return x.name == s.name; }));
        }
        continue;
      }
      const auto it = std::find_if(all.begin(), all.end(), [&](const auto& s) { return s.name == name; });
      if (it == all.end()) throw UsageError(fmt::format("unknown suite '{}' (see verify --list)", name));
      picked.push_back(&*it);
    }
  }
  std::vector<const verify::Suite*> unique;
  for (const auto* s : picked) {
    if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(s);
  }
  return unique;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortest paths between opposite faces of a cube"};
  app.name("cubepath");
  app.require_subcommand(1, 1);

  std::string source, target;
  bool json = false;
  double edge_length = 2.0;
  auto* solve_cmd = app.add_subcommand("solve", "Shortest path between a bottom-face and a top-face point");
  solve_cmd->add_option("--source", source, "Source point s1,s2 in (-1,1)^2")->required();
  solve_cmd->add_option("--target", target, "Target point t1,t2 in (-1,1)^2")->required();
  solve_cmd->add_flag("--json", json, "Print JSON");
  solve_cmd->add_option("--edge-length", edge_length, "Cube edge length used to scale reported lengths")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string svg_path, json_path;
  auto* regions_cmd = app.add_subcommand("regions", "Target regions with a 4-face shortest path");
  regions_cmd->add_option("--source", source, "Source point s1,s2")->required();
  regions_cmd->add_option("--svg", svg_path, "Write an SVG drawing ('-' for stdout)");
  regions_cmd->add_option("--json", json_path, "Write the polygons as JSON ('-' for stdout)");

  int n = 101;
  std::string csv_path;
  bool sampled = false;
  double pitch = 0.01;
  unsigned threads = default_threads();
  auto* heatmap_cmd = app.add_subcommand("heatmap", "Probability of a 4-face shortest path over source positions");
  heatmap_cmd->add_option("--n", n, "Lattice points per axis")->check(CLI::Range(3, 100000))->capture_default_str();
  heatmap_cmd->add_option("--csv", csv_path, "CSV output path ('-' for stdout, the default)");
  heatmap_cmd->add_option("--svg", svg_path, "Grayscale SVG output path");
  heatmap_cmd->add_flag("--sampled", sampled, "Estimate by target sampling instead of exact areas");
  heatmap_cmd->add_option("--pitch", pitch, "Target lattice pitch for --sampled")->capture_default_str();
  heatmap_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> suite_names{"all"};
  bool list = false;
  verify::Options vopt;
  std::string artifacts;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite_names, "Suite names, comma separated, 'acceptance' or 'all'")
      ->delimiter(',')
      ->capture_default_str();
  verify_cmd->add_flag("--list", list, "List suites and exit");
  verify_cmd->add_option("--threads", vopt.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vopt.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--artifacts", artifacts, "Directory for heatmap CSV and SVG");

  auto* nets_cmd = app.add_subcommand("nets", "Enumerate the nets of the cube");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    if (solve_cmd->parsed()) {
      const Point s = parse_point(source, "--source");
      const Point t = parse_point(target, "--target");
      const SolveResult r = solve(s, t);
      const double scale = edge_length / 2.0;
      if (json) {
        out << solve_to_json(r, scale).dump(2) << "\n";
      } else {
        std::string mins;
        for (const auto& m : r.minimizers) mins += (mins.empty() ? "" : " ") + m.to_string();
        out << fmt::format("length {}\nfaces {}\nminimizers {}\n", format12(r.length * scale), r.faces, mins);
        for (const PathCandidate& c : r.candidates) {
          out << fmt::format("  {:<4} {:>18} {:<6} {}\n", c.sequence.to_string(),
                             format12(c.length_sq * scale * scale), to_string(c.classification), c.faces);
        }
      }
    } else if (regions_cmd->parsed()) {
      const Point s = parse_point(source, "--source");
      require_interior(s, "source");
      const RegionSet rs = region_set(s);
      if (!svg_path.empty()) emit(svg_path, regions_svg(rs), out);
      if (!json_path.empty()) emit(json_path, regions_to_json(rs).dump(2) + "\n", out);
      if (svg_path.empty() && json_path.empty()) {
        out << fmt::format("source {},{}\nunion_area {}\nprobability {}\n", format12(s.x), format12(s.y),
                           format12(rs.union_area), format12(rs.probability));
        for (const auto& [seq, poly] : rs.polygons) {
          if (!poly.empty()) out << fmt::format("  {} area {}\n", seq.to_string(), format12(area(poly)));
        }
      }
    } else if (heatmap_cmd->parsed()) {
      const ProbabilityGrid g = heatmap(n, sampled ? SamplingMode::sampled(pitch) : SamplingMode::exact(), threads);
      std::ostringstream csv;
      write_heatmap_csv(csv, g);
      if (!csv_path.empty() || svg_path.empty()) emit(csv_path.empty() ? "-" : csv_path, csv.str(), out);
      if (!svg_path.empty()) emit(svg_path, heatmap_svg(g), out);
    } else if (verify_cmd->parsed()) {
      if (list) {
        for (const auto& s : verify::suites()) out << fmt::format("{:<26} {}\n", s.name, s.description);
        return kOk;
      }
      if (!artifacts.empty()) vopt.artifact_dir = artifacts;
      bool all_passed = true;
      for (const verify::Suite* suite : select_suites(suite_names)) {
        const verify::CheckResult r = suite->run(vopt);
        all_passed = all_passed && r.passed;
        out << fmt::format("{} {} ({:.2f} s): {}\n", r.passed ? "PASS" : "FAIL", r.name, r.seconds, r.detail);
        out.flush();
      }
      return all_passed ? kOk : kVerificationFailed;
    } else if (nets_cmd->parsed()) {
      out << nets_report(enumerate_nets());
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kOk;
}

}  // namespace cubepath::cli
