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

#include <optional>
#include <span>
#include <string_view>

#include "shoelace/geom.hpp"

namespace shoelace {

/// Three-way point location result.
enum class Classification { Inside, Outside, OnBoundary };

/// Stable lowercase token: "inside", "outside" or "boundary".
std::string_view name(Classification c) noexcept;

/// Point-in-polygon algorithm selector. Values carry stable kebab-case names
/// used by the CLI and in CSV/JSON output.
enum class AlgorithmId {
  ExtraVertexAppend,   // "extra-vertex-append"
  ExtraVertexBestEdge, // "extra-vertex"
  Triangulation,       // "triangulation"
  RayCasting,          // "ray-casting"
  AngleSum,            // "angle-sum"
  HalfPlaneOracle,     // "half-plane-oracle"
};

std::string_view name(AlgorithmId id) noexcept;
std::optional<AlgorithmId> parse_algorithm(std::string_view token) noexcept;
std::span<const AlgorithmId> all_algorithms() noexcept;

/// Change in the raw shoelace sum caused by inserting p between vertices i
/// and i+1 (wraparound): equals triangle_signed2(v_i, p, v_{i+1}), which is
/// the determinant identity
///   cross_det(v_i, p) + cross_det(p, v_{i+1}) - cross_det(v_i, v_{i+1}).
/// Throws BadIndex when edge_index >= n.
double insertion_delta(const Polygon& poly, std::size_t edge_index,
                       const Point& p);

/// Area of the ring with p inserted between vertices i and i+1, computed by
/// a full shoelace pass over the n+1 vertex sequence. Independent of
/// insertion_delta; the two routes agree within rounding.
/// Throws BadIndex when edge_index >= n.
double area_with_insertion(const Polygon& poly, std::size_t edge_index,
                           const Point& p);

/// Extra-vertex test, append placement: p is logically appended after the
/// last vertex (inserted on the closing edge) and the recomputed area is
/// compared against the original. Known limitation: an outside point on the
/// interior side of the closing edge's supporting line is reported Inside;
/// the answer also depends on which rotation of the ring was given. Kept as
/// the cheapest variant and for benchmark comparisons; prefer
/// classify_extra_vertex_best_edge for correct answers.
/// Throws NotConvex for non-convex polygons.
Classification classify_extra_vertex_append(const Polygon& poly,
                                            const Point& p,
                                            const Tolerance& tol);

/// Extra-vertex test, best-edge placement: evaluates the insertion delta at
/// every edge in O(n). Outside iff some insertion grows the absolute sum
/// beyond tolerance; OnBoundary iff no growth exists and some insertion
/// leaves the sum unchanged within tolerance; Inside otherwise.
/// Throws NotConvex for non-convex polygons.
Classification classify_extra_vertex_best_edge(const Polygon& poly,
                                               const Point& p,
                                               const Tolerance& tol);

/// Sum-of-triangle-areas test: compares the fan of |triangle(p, v_i, v_{i+1})|
/// areas over all edges against the polygon area. Equal means the point is
/// inside or on the ring (disambiguated with is_point_on_ring); a sum below
/// the polygon area is impossible for convex input and raises
/// InternalInconsistency.
/// Throws NotConvex for non-convex polygons.
Classification classify_triangulation(const Polygon& poly, const Point& p,
                                      const Tolerance& tol);

/// Crossing-parity test with a +x ray and the half-open edge rule: edge
/// (a, b) counts iff (a.y > p.y) != (b.y > p.y) and the crossing lies right
/// of p. Works for any simple polygon; boundary points are caught by
/// is_point_on_ring first.
Classification classify_ray_casting(const Polygon& poly, const Point& p,
                                    const Tolerance& tol);

/// Winding test: sums the signed angles subtended at p by each edge;
/// |sum| > pi means inside. Boundary points are caught by is_point_on_ring
/// first.
Classification classify_angle_sum(const Polygon& poly, const Point& p,
                                  const Tolerance& tol);

/// Signed angle sum subtended at p by the ring, in radians: -2*pi for an
/// interior point of a clockwise ring, +2*pi counter-clockwise, near zero
/// outside. p must not coincide with a vertex.
double angle_sum(const Polygon& poly, const Point& p) noexcept;

/// Ground-truth predicate for convex polygons: p is outside iff it lies
/// strictly beyond some edge's supporting line, on the boundary iff it lies
/// within the distance band of some edge segment, else inside. Uses per-edge
/// sign tests only; no area summation.
/// Throws NotConvex for non-convex polygons.
Classification classify_half_plane_oracle(const Polygon& poly, const Point& p,
                                          const Tolerance& tol);

/// Dispatch by algorithm id.
Classification classify(AlgorithmId algorithm, const Polygon& poly,
                        const Point& p, const Tolerance& tol);

}  // namespace shoelace
