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

#include "shoelace/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "shoelace/polygen.hpp"

namespace shoelace {

namespace {

using Clock = std::chrono::steady_clock;

// Keeps the classification result observable so the timed call cannot be
// optimized away.
inline void consume(Classification c) noexcept {
  int v = static_cast<int>(c);
  asm volatile("" : : "r"(v) : "memory");
}

void check_config(const BenchConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
  if (cfg.reps < 1) throw std::invalid_argument("bench: reps must be >= 1");
  if (cfg.points_per_rep < 1) {
    throw std::invalid_argument("bench: points_per_rep must be >= 1");
  }
  if (cfg.vertex_counts.empty()) {
    throw std::invalid_argument("bench: vertex_counts must be nonempty");
  }
  for (int n : cfg.vertex_counts) {
    if (n < 3) throw std::invalid_argument("bench: vertex counts must be >= 3");
  }
  if (cfg.algorithms.empty()) {
    throw std::invalid_argument("bench: algorithms must be nonempty");
  }
}

std::uint64_t trial_seed(const BenchConfig& cfg, int trial, int n_vertices) {
  return mix_seed(mix_seed(cfg.seed, static_cast<std::uint64_t>(trial)),
                  static_cast<std::uint64_t>(n_vertices));
}

}  // namespace

TrialInputs generate_trial_inputs(const BenchConfig& cfg, int trial,
                                  int n_vertices) {
  const std::uint64_t base = trial_seed(cfg, trial, n_vertices);
  GenConfig gen;
  gen.n = n_vertices;
  gen.seed = base;
  Polygon poly = gen_convex(gen);

  const std::size_t count =
      static_cast<std::size_t>(cfg.reps) *
      static_cast<std::size_t>(cfg.points_per_rep);
  std::vector<Point> points;
  points.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const std::uint64_t point_seed = mix_seed(base, j + 1);
    points.push_back(j % 2 == 0 ? gen_point_inside(poly, point_seed)
                                : gen_point_outside(poly, point_seed));
  }
  return TrialInputs{std::move(poly), std::move(points)};
}

std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg) {
  check_config(cfg);
  if (!Clock::is_steady) {
    throw ClockUnavailable("no monotonic clock available");
  }
  const Tolerance tol;
  std::vector<BenchRecord> records;
  records.reserve(cfg.vertex_counts.size() * cfg.algorithms.size() *
                  static_cast<std::size_t>(cfg.trials));
  const std::size_t ppr = static_cast<std::size_t>(cfg.points_per_rep);

  for (int n : cfg.vertex_counts) {
    for (int trial = 1; trial <= cfg.trials; ++trial) {
      const TrialInputs inputs = generate_trial_inputs(cfg, trial, n);
      for (AlgorithmId alg : cfg.algorithms) {
        if (trial == 1) {
          // Warm-up: one untimed batch.
          const std::size_t limit = std::min(inputs.points.size(), ppr);
          for (std::size_t k = 0; k < limit; ++k) {
            consume(classify(alg, inputs.polygon, inputs.points[k], tol));
          }
        }
        double total_ns = 0.0;
        for (int rep = 0; rep < cfg.reps; ++rep) {
          const std::size_t offset = static_cast<std::size_t>(rep) * ppr;
          const auto t0 = Clock::now();
          for (std::size_t k = 0; k < ppr; ++k) {
            consume(
                classify(alg, inputs.polygon, inputs.points[offset + k], tol));
          }
          const auto t1 = Clock::now();
          total_ns += std::chrono::duration<double, std::nano>(t1 - t0).count();
        }
        const double mean =
            total_ns / (static_cast<double>(cfg.reps) * static_cast<double>(ppr));
        records.push_back(BenchRecord{trial, n, alg, mean});
      }
    }
  }
  return records;
}

std::vector<SummaryRow> summarize(std::span<const BenchRecord> records) {
  if (records.empty()) {
    throw EmptyInput("summarize: no records");
  }
  struct Cell {
    double total = 0.0;
    int count = 0;
  };
  std::map<std::pair<int, AlgorithmId>, Cell> cells;
  for (const BenchRecord& r : records) {
    Cell& c = cells[{r.n_vertices, r.algorithm}];
    c.total += r.mean_time_ns;
    c.count += 1;
  }

  std::vector<SummaryRow> rows;
  rows.reserve(cells.size());
  for (const auto& [key, cell] : cells) {
    rows.push_back(SummaryRow{key.first, key.second,
                              cell.total / static_cast<double>(cell.count),
                              std::nullopt});
  }
  std::sort(rows.begin(), rows.end(), [](const SummaryRow& a,
                                         const SummaryRow& b) {
    if (a.n_vertices != b.n_vertices) return a.n_vertices < b.n_vertices;
    return static_cast<int>(a.algorithm) < static_cast<int>(b.algorithm);
  });

  // Ratio reference per n: the append variant when measured, else best-edge.
  for (SummaryRow& row : rows) {
    const auto reference = [&](AlgorithmId id) -> const SummaryRow* {
      for (const SummaryRow& r : rows) {
        if (r.n_vertices == row.n_vertices && r.algorithm == id) return &r;
      }
      return nullptr;
    };
    const SummaryRow* ref = reference(AlgorithmId::ExtraVertexAppend);
    if (ref == nullptr) ref = reference(AlgorithmId::ExtraVertexBestEdge);
    if (ref != nullptr) {
      row.ratio_vs_extra_vertex = row.grand_mean_ns / ref->grand_mean_ns;
    }
  }
  return rows;
}

std::string_view name(PointMode mode) noexcept {
  switch (mode) {
    case PointMode::Mixed:
      return "mixed";
    case PointMode::Inside:
      return "inside";
    case PointMode::Outside:
      return "outside";
    case PointMode::OnEdge:
      return "edge";
  }
  return "mixed";
}

std::optional<PointMode> parse_point_mode(std::string_view token) noexcept {
  for (PointMode m : {PointMode::Mixed, PointMode::Inside, PointMode::Outside,
                      PointMode::OnEdge}) {
    if (token == name(m)) return m;
  }
  return std::nullopt;
}

std::vector<Divergence> differential_fuzz(const FuzzConfig& cfg) {
  if (cfg.iterations == 0) {
    throw std::invalid_argument("fuzz: iterations must be >= 1");
  }
  const Tolerance tol;
  std::vector<Divergence> divergences;
  for (std::uint64_t i = 0; i < cfg.iterations; ++i) {
    const std::uint64_t iter_seed = mix_seed(cfg.seed, i);
    SplitMix64 rng(iter_seed);

    GenConfig gen;
    gen.n = 3 + static_cast<int>(rng.below(62));  // [3, 64]
    gen.seed = rng.next();
    const Polygon poly = gen_convex(gen);
    const double band = 1e-6 * diagonal(bounds(poly));

    PointMode mode = cfg.mode;
    if (mode == PointMode::Mixed) {
      switch (rng.below(3)) {
        case 0:
          mode = PointMode::Inside;
          break;
        case 1:
          mode = PointMode::Outside;
          break;
        default:
          mode = PointMode::OnEdge;
          break;
      }
    }

    Point p{};
    for (int tries = 0; tries < 64; ++tries) {
      const std::uint64_t point_seed = rng.next();
      switch (mode) {
        case PointMode::Inside:
          p = gen_point_inside(poly, point_seed);
          break;
        case PointMode::Outside:
          p = gen_point_outside(poly, point_seed);
          break;
        default:
          p = gen_point_on_edge(poly, point_seed);
          break;
      }
      // On-edge points are supposed to sit in the band; the others must
      // stay clear of it.
      if (mode == PointMode::OnEdge || distance_to_ring(poly, p) > band) {
        break;
      }
    }

    const Classification expected = classify_half_plane_oracle(poly, p, tol);
    for (AlgorithmId alg : cfg.algorithms) {
      const Classification got = classify(alg, poly, p, tol);
      if (got != expected) {
        divergences.push_back(Divergence{poly, p, expected, got, alg});
      }
    }
  }
  return divergences;
}

}  // namespace shoelace
