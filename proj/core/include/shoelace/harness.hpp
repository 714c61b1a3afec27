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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shoelace/classify.hpp"
#include "shoelace/geom.hpp"

namespace shoelace {

/// Timing protocol configuration: `trials` outer repetitions, each timing
/// `reps` classification batches of `points_per_rep` calls, per vertex count
/// and per algorithm.
struct BenchConfig {
  std::vector<int> vertex_counts{20, 180};
  int trials = 20;
  int reps = 100;
  std::vector<AlgorithmId> algorithms{AlgorithmId::ExtraVertexAppend,
                                      AlgorithmId::Triangulation};
  std::uint64_t seed = 0;
  int points_per_rep = 1;
};

/// One benchmark cell: mean nanoseconds per classification call for a trial.
struct BenchRecord {
  int trial = 0;  ///< 1-based trial index
  int n_vertices = 0;
  AlgorithmId algorithm = AlgorithmId::ExtraVertexAppend;
  double mean_time_ns = 0.0;
};

/// Summary cell: grand mean over trials plus the ratio against the
/// extra-vertex reference at the same vertex count (append when measured,
/// best-edge otherwise; absent when neither was measured).
struct SummaryRow {
  int n_vertices = 0;
  AlgorithmId algorithm = AlgorithmId::ExtraVertexAppend;
  double grand_mean_ns = 0.0;
  std::optional<double> ratio_vs_extra_vertex;
};

/// The polygon and classification-point sequence a trial feeds to every
/// algorithm; exposed so the pairing can be tested.
struct TrialInputs {
  Polygon polygon;
  std::vector<Point> points;
};

/// Deterministic per-(trial, n) inputs for the given configuration. Points
/// alternate inside/outside.
TrialInputs generate_trial_inputs(const BenchConfig& cfg, int trial,
                                  int n_vertices);

/// Runs the timing protocol. Every algorithm in a trial classifies the
/// identical point sequence; timing uses the monotonic steady clock around
/// each batch, with results consumed to defeat dead-code elimination. One
/// untimed warm-up batch precedes trial 1 for each algorithm. Produces
/// trials * |vertex_counts| * |algorithms| records.
/// Throws std::invalid_argument for an invalid configuration and
/// ClockUnavailable when no monotonic clock exists.
std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg);

/// Grand means per (n, algorithm) with ratio columns, ordered by vertex
/// count then algorithm id.
/// Throws EmptyInput for an empty record list.
std::vector<SummaryRow> summarize(std::span<const BenchRecord> records);

/// Point placement mix for the differential fuzzer.
enum class PointMode { Mixed, Inside, Outside, OnEdge };

std::string_view name(PointMode mode) noexcept;
std::optional<PointMode> parse_point_mode(std::string_view token) noexcept;

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::uint64_t iterations = 10000;
  std::vector<AlgorithmId> algorithms{
      AlgorithmId::ExtraVertexBestEdge, AlgorithmId::Triangulation,
      AlgorithmId::RayCasting, AlgorithmId::AngleSum};
  PointMode mode = PointMode::Mixed;
};

/// One disagreement against the half-plane oracle.
struct Divergence {
  Polygon polygon;
  Point point;
  Classification expected = Classification::Inside;  ///< oracle's answer
  Classification got = Classification::Inside;
  AlgorithmId algorithm = AlgorithmId::ExtraVertexAppend;
};

/// Random convex polygons (n in [3, 64]) and generated points, each
/// algorithm compared against the half-plane oracle. Inside/outside points
/// closer to the boundary than 1e-6 of the bounding-box diagonal are
/// redrawn. Deterministic per seed.
/// Throws std::invalid_argument when iterations == 0.
std::vector<Divergence> differential_fuzz(const FuzzConfig& cfg);

}  // namespace shoelace
