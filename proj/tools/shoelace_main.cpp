// Copyright 2026 The Shoelace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shoelace/containment.hpp"
#include "shoelace/harness.hpp"
#include "shoelace/io.hpp"
#include "shoelace/polygen.hpp"

namespace {

using namespace shoelace;

// Exit codes: 0 success, 1 fuzz divergences found, 2 usage or parse error,
// 3 degenerate input, 4 not convex.

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (begin <= s.size()) {
    const std::size_t end = s.find(sep, begin);
    if (end == std::string::npos) {
      parts.push_back(s.substr(begin));
      break;
    }
    parts.push_back(s.substr(begin, end - begin));
    begin = end + 1;
  }
  return parts;
}

double parse_number(const std::string& token, const char* what) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ParseError(std::string("bad ") + what + ": '" + token + "'");
  }
  return value;
}

Point parse_point(const std::string& token) {
  const auto parts = split(token, ',');
  if (parts.size() != 2) {
    throw ParseError("bad point '" + token + "': expected X,Y");
  }
  return {parse_number(parts[0], "coordinate"),
          parse_number(parts[1], "coordinate")};
}

std::string algorithm_names() {
  std::string names;
  for (AlgorithmId id : all_algorithms()) {
    if (!names.empty()) names += ", ";
    names += name(id);
  }
  return names;
}

AlgorithmId parse_algorithm_or_die(const std::string& token) {
  const auto id = parse_algorithm(token);
  if (!id.has_value()) {
    throw ParseError("unknown algorithm '" + token +
                     "'; valid names: " + algorithm_names());
  }
  return *id;
}

std::vector<AlgorithmId> parse_algorithm_list(const std::string& csv) {
  std::vector<AlgorithmId> ids;
  for (const std::string& token : split(csv, ',')) {
    ids.push_back(parse_algorithm_or_die(token));
  }
  return ids;
}

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
  std::vector<int> values;
  for (const std::string& token : split(csv, ',')) {
    const double v = parse_number(token, what);
    values.push_back(static_cast<int>(v));
  }
  return values;
}

Tolerance tolerance_with(double abs_eps) {
  Tolerance tol;
  if (abs_eps > 0.0) tol.abs_eps = abs_eps;
  if (!valid(tol)) throw ParseError("epsilon must be positive and finite");
  return tol;
}

Polygon load_polygon(const std::string& path) {
  return Polygon(read_polygon_file(path));
}

std::string format_area(double value) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%#.12g", value);
  return std::string(buf.data());
}

struct CommonFlags {
  std::string polygon_file;
  double epsilon = 0.0;  // 0 means default
};

int run_area(const CommonFlags& flags) {
  tolerance_with(flags.epsilon);  // validate even though area needs no band
  const Polygon poly = load_polygon(flags.polygon_file);
  std::cout << format_area(area(poly)) << '\n';
  return 0;
}

struct ClassifyFlags : CommonFlags {
  std::string point;
  std::string algorithm = "extra-vertex";
  bool check_oracle = false;
};

int run_classify(const ClassifyFlags& flags) {
  const Tolerance tol = tolerance_with(flags.epsilon);
  const AlgorithmId algorithm = parse_algorithm_or_die(flags.algorithm);
  const Polygon poly = load_polygon(flags.polygon_file);
  const Point p = parse_point(flags.point);
  const Classification result = classify(algorithm, poly, p, tol);
  std::string line{name(result)};
  if (flags.check_oracle) {
    const Classification oracle = classify_half_plane_oracle(poly, p, tol);
    if (oracle != result) {
      line += " [DIVERGES: oracle=";
      line += name(oracle);
      line += "]";
    }
  }
  std::cout << line << '\n';
  return 0;
}

struct ContainsFlags : CommonFlags {
  std::string segment;
  std::string inner_polygon;
};

int run_contains(const ContainsFlags& flags) {
  const Tolerance tol = tolerance_with(flags.epsilon);
  if (flags.segment.empty() == flags.inner_polygon.empty()) {
    throw ParseError("provide exactly one of --segment or --inner-polygon");
  }
  const Polygon poly = load_polygon(flags.polygon_file);
  bool result = false;
  if (!flags.segment.empty()) {
    const auto ends = split(flags.segment, ':');
    if (ends.size() != 2) {
      throw ParseError("bad segment '" + flags.segment +
                       "': expected X1,Y1:X2,Y2");
    }
    result = segment_inside(poly, parse_point(ends[0]), parse_point(ends[1]),
                            tol);
  } else {
    const Polygon inner = load_polygon(flags.inner_polygon);
    result = polygon_inside(poly, inner, tol);
  }
  std::cout << (result ? "true" : "false") << '\n';
  return 0;
}

struct GenFlags {
  int n = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string point;
  double radius = 100.0;
  double jitter = 0.25;
  std::string orientation = "cw";
};

int run_gen(const GenFlags& flags) {
  GenConfig cfg;
  cfg.n = flags.n;
  cfg.seed = flags.seed;
  cfg.radius = flags.radius;
  cfg.jitter = flags.jitter;
  if (flags.orientation == "cw") {
    cfg.orientation = Orientation::Clockwise;
  } else if (flags.orientation == "ccw") {
    cfg.orientation = Orientation::CounterClockwise;
  } else {
    throw ParseError("bad orientation '" + flags.orientation +
                     "': expected cw or ccw");
  }
  const Polygon poly = gen_convex(cfg);
  write_polygon_file(flags.out, poly.vertices());
  if (!flags.point.empty()) {
    const std::uint64_t point_seed = mix_seed(cfg.seed, 0x706f696e74ULL);
    Point p{};
    if (flags.point == "inside") {
      p = gen_point_inside(poly, point_seed);
    } else if (flags.point == "outside") {
      p = gen_point_outside(poly, point_seed);
    } else if (flags.point == "edge") {
      p = gen_point_on_edge(poly, point_seed);
    } else {
      throw ParseError("bad point mode '" + flags.point +
                       "': expected inside, outside or edge");
    }
    write_point_file(flags.out + ".point", p);
  }
  return 0;
}

struct BenchFlags {
  std::string n_list = "20,180";
  int trials = 20;
  int reps = 100;
  int points_per_rep = 1;
  std::string algorithms = "extra-vertex-append,triangulation";
  std::uint64_t seed = 0;
  std::string out;
  std::string summary_out;
};

std::string default_summary_path(const std::string& out) {
  std::filesystem::path path(out);
  std::string ext = path.extension().string();
  if (ext.empty()) ext = ".csv";
  const std::string stem = path.stem().string();
  return (path.parent_path() / (stem + "_summary" + ext)).string();
}

int run_bench(const BenchFlags& flags) {
  BenchConfig cfg;
  cfg.vertex_counts = parse_int_list(flags.n_list, "vertex count");
  cfg.trials = flags.trials;
  cfg.reps = flags.reps;
  cfg.points_per_rep = flags.points_per_rep;
  cfg.algorithms = parse_algorithm_list(flags.algorithms);
  cfg.seed = flags.seed;

  const auto records = run_benchmark(cfg);
  const auto summary = summarize(records);

  std::ofstream records_file(flags.out);
  if (!records_file) throw ParseError("cannot write " + flags.out);
  write_records_csv(records_file, records);

  const std::string summary_path = flags.summary_out.empty()
                                       ? default_summary_path(flags.out)
                                       : flags.summary_out;
  std::ofstream summary_file(summary_path);
  if (!summary_file) throw ParseError("cannot write " + summary_path);
  write_summary_csv(summary_file, summary);

  std::printf("%10s  %-22s %14s %8s\n", "n_vertices", "algorithm",
              "grand_mean_ns", "ratio");
  for (const SummaryRow& row : summary) {
    if (row.ratio_vs_extra_vertex.has_value()) {
      std::printf("%10d  %-22s %14.2f %8.3f\n", row.n_vertices,
                  std::string(name(row.algorithm)).c_str(), row.grand_mean_ns,
                  *row.ratio_vs_extra_vertex);
    } else {
      std::printf("%10d  %-22s %14.2f %8s\n", row.n_vertices,
                  std::string(name(row.algorithm)).c_str(), row.grand_mean_ns,
                  "-");
    }
  }
  return 0;
}

struct FuzzFlags {
  std::uint64_t iterations = 10000;
  std::uint64_t seed = 0;
  std::string algorithms = "extra-vertex,triangulation,ray-casting,angle-sum";
  std::string point_mode = "mixed";
  std::string out;
};

int run_fuzz(const FuzzFlags& flags) {
  FuzzConfig cfg;
  cfg.iterations = flags.iterations;
  cfg.seed = flags.seed;
  cfg.algorithms = parse_algorithm_list(flags.algorithms);
  const auto mode = parse_point_mode(flags.point_mode);
  if (!mode.has_value()) {
    throw ParseError("bad point mode '" + flags.point_mode +
                     "': expected mixed, inside, outside or edge");
  }
  cfg.mode = *mode;

  const auto divergences = differential_fuzz(cfg);
  const std::string report = divergences_to_json(divergences);
  if (flags.out.empty()) {
    std::cout << report << '\n';
  } else {
    std::ofstream file(flags.out);
    if (!file) throw ParseError("cannot write " + flags.out);
    file << report << '\n';
  }
  std::cerr << divergences.size() << " divergence(s) in " << flags.iterations
            << " iteration(s)\n";
  return divergences.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex-polygon point-in-polygon toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  CommonFlags area_flags;
  auto* cmd_area = app.add_subcommand("area", "Print the polygon area");
  cmd_area->add_option("polygon", area_flags.polygon_file, "polygon file")
      ->required();
  cmd_area->add_option("--epsilon", area_flags.epsilon, "absolute tolerance");
  cmd_area->callback([&] { exit_code = run_area(area_flags); });

  ClassifyFlags classify_flags;
  auto* cmd_classify =
      app.add_subcommand("classify", "Locate a point against a polygon");
  cmd_classify
      ->add_option("polygon", classify_flags.polygon_file, "polygon file")
      ->required();
  cmd_classify->add_option("--point", classify_flags.point, "query point X,Y")
      ->required();
  cmd_classify->add_option("--algorithm", classify_flags.algorithm,
                           "one of: " + algorithm_names());
  cmd_classify->add_option("--epsilon", classify_flags.epsilon,
                           "absolute tolerance");
  cmd_classify->add_flag("--check-oracle", classify_flags.check_oracle,
                         "compare against the half-plane oracle");
  cmd_classify->callback([&] { exit_code = run_classify(classify_flags); });

  ContainsFlags contains_flags;
  auto* cmd_contains = app.add_subcommand(
      "contains", "Test segment or polygon containment (convex outer)");
  cmd_contains
      ->add_option("polygon", contains_flags.polygon_file, "outer polygon")
      ->required();
  cmd_contains->add_option("--segment", contains_flags.segment,
                           "segment X1,Y1:X2,Y2");
  cmd_contains->add_option("--inner-polygon", contains_flags.inner_polygon,
                           "inner polygon file");
  cmd_contains->add_option("--epsilon", contains_flags.epsilon,
                           "absolute tolerance");
  cmd_contains->callback([&] { exit_code = run_contains(contains_flags); });

  GenFlags gen_flags;
  auto* cmd_gen =
      app.add_subcommand("gen", "Generate a random convex polygon file");
  cmd_gen->add_option("--n", gen_flags.n, "vertex count")->required();
  cmd_gen->add_option("--seed", gen_flags.seed, "generator seed");
  cmd_gen->add_option("--out", gen_flags.out, "output polygon file")
      ->required();
  cmd_gen->add_option("--point", gen_flags.point,
                      "also write <out>.point: inside, outside or edge");
  cmd_gen->add_option("--radius", gen_flags.radius, "base circle radius");
  cmd_gen->add_option("--jitter", gen_flags.jitter,
                      "affine distortion in [0, 0.5)");
  cmd_gen->add_option("--orientation", gen_flags.orientation, "cw or ccw");
  cmd_gen->callback([&] { exit_code = run_gen(gen_flags); });

  BenchFlags bench_flags;
  auto* cmd_bench = app.add_subcommand(
      "bench", "Run the timing protocol and write records + summary CSV");
  cmd_bench->add_option("--n-list", bench_flags.n_list,
                        "comma-separated vertex counts");
  cmd_bench->add_option("--trials", bench_flags.trials, "outer trials");
  cmd_bench->add_option("--reps", bench_flags.reps, "timed reps per trial");
  cmd_bench->add_option("--points-per-rep", bench_flags.points_per_rep,
                        "classifications per timed rep");
  cmd_bench->add_option("--algorithms", bench_flags.algorithms,
                        "comma-separated algorithm names");
  cmd_bench->add_option("--seed", bench_flags.seed, "input generator seed");
  cmd_bench->add_option("--out", bench_flags.out, "records CSV path")
      ->required();
  cmd_bench->add_option("--summary-out", bench_flags.summary_out,
                        "summary CSV path (default: <out>_summary.csv)");
  cmd_bench->callback([&] { exit_code = run_bench(bench_flags); });

  FuzzFlags fuzz_flags;
  auto* cmd_fuzz = app.add_subcommand(
      "fuzz", "Differential-fuzz classifiers against the half-plane oracle");
  cmd_fuzz->add_option("--iterations", fuzz_flags.iterations, "iterations");
  cmd_fuzz->add_option("--seed", fuzz_flags.seed, "fuzzer seed");
  cmd_fuzz->add_option("--algorithms", fuzz_flags.algorithms,
                       "comma-separated algorithm names");
  cmd_fuzz->add_option("--point-mode", fuzz_flags.point_mode,
                       "mixed, inside, outside or edge");
  cmd_fuzz->add_option("--out", fuzz_flags.out,
                       "JSON report path (default: stdout)");
  cmd_fuzz->callback([&] { exit_code = run_fuzz(fuzz_flags); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const NotConvex& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const DegenerateInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
