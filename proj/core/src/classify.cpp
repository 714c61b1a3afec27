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

#include "shoelace/classify.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace shoelace {

namespace {

void require_convex(const Polygon& poly) {
  if (!poly.is_convex()) {
    throw NotConvex("operation requires a convex polygon");
  }
}

void require_edge(const Polygon& poly, std::size_t edge_index) {
  if (edge_index >= poly.size()) {
    throw BadIndex("edge index out of range");
  }
}

constexpr std::array<AlgorithmId, 6> kAllAlgorithms = {
    AlgorithmId::ExtraVertexAppend, AlgorithmId::ExtraVertexBestEdge,
    AlgorithmId::Triangulation,     AlgorithmId::RayCasting,
    AlgorithmId::AngleSum,          AlgorithmId::HalfPlaneOracle,
};

}  // namespace

std::string_view name(Classification c) noexcept {
  switch (c) {
    case Classification::Inside:
      return "inside";
    case Classification::Outside:
      return "outside";
    case Classification::OnBoundary:
      return "boundary";
  }
  return "inside";
}

std::string_view name(AlgorithmId id) noexcept {
  switch (id) {
    case AlgorithmId::ExtraVertexAppend:
      return "extra-vertex-append";
    case AlgorithmId::ExtraVertexBestEdge:
      return "extra-vertex";
    case AlgorithmId::Triangulation:
      return "triangulation";
    case AlgorithmId::RayCasting:
      return "ray-casting";
    case AlgorithmId::AngleSum:
      return "angle-sum";
    case AlgorithmId::HalfPlaneOracle:
      return "half-plane-oracle";
  }
  return "extra-vertex";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view token) noexcept {
  for (AlgorithmId id : kAllAlgorithms) {
    if (token == name(id)) {
      return id;
    }
  }
  return std::nullopt;
}

std::span<const AlgorithmId> all_algorithms() noexcept {
  return kAllAlgorithms;
}

double insertion_delta(const Polygon& poly, std::size_t edge_index,
                       const Point& p) {
  require_edge(poly, edge_index);
  const Point& a = poly[edge_index];
  const Point& b = poly[(edge_index + 1) % poly.size()];
  return triangle_signed2(a, p, b);
}

double area_with_insertion(const Polygon& poly, std::size_t edge_index,
                           const Point& p) {
  require_edge(poly, edge_index);
  // One shoelace pass over the n+1 vertex sequence with p spliced in after
  // edge_index, without materializing the list. Anchored at vertex 0 like
  // shoelace_signed_sum so both routes share the term layout.
  const std::size_t n = poly.size();
  const Point origin = poly[0];
  detail::NeumaierSum acc;
  double ax = 0.0;
  double ay = 0.0;
  const auto push = [&](const Point& v) {
    const double bx = v.x - origin.x;
    const double by = v.y - origin.y;
    acc.add(ax * by - bx * ay);
    ax = bx;
    ay = by;
  };
  for (std::size_t i = 1; i <= edge_index; ++i) {
    push(poly[i]);
  }
  push(p);
  for (std::size_t i = edge_index + 1; i < n; ++i) {
    push(poly[i]);
  }
  push(poly[0]);
  return 0.5 * std::abs(acc.value());
}

Classification classify_extra_vertex_append(const Polygon& poly,
                                            const Point& p,
                                            const Tolerance& tol) {
  require_convex(poly);
  const double original = area(poly);
  const double inserted = area_with_insertion(poly, poly.size() - 1, p);
  const double eq = area_equality_tolerance(original, inserted, tol);
  if (inserted > original + eq) {
    return Classification::Outside;
  }
  if (inserted < original - eq) {
    return Classification::Inside;
  }
  return Classification::OnBoundary;
}

Classification classify_extra_vertex_best_edge(const Polygon& poly,
                                               const Point& p,
                                               const Tolerance& tol) {
  require_convex(poly);
  const std::size_t n = poly.size();
  const double sum = poly.signed_sum();
  const double abs_sum = std::abs(sum);
  bool equal_seen = false;
  for (std::size_t i = 0; i < n; ++i) {
    const double delta = triangle_signed2(poly[i], p, poly[(i + 1) % n]);
    const double new_abs = std::abs(sum + delta);
    // Raw sums are twice the areas, so the band is doubled.
    const double band =
        2.0 * tol.abs_eps + tol.rel_eps * std::max(abs_sum, new_abs);
    if (new_abs > abs_sum + band) {
      return Classification::Outside;
    }
    if (std::abs(new_abs - abs_sum) <= band) {
      equal_seen = true;
    }
  }
  return equal_seen ? Classification::OnBoundary : Classification::Inside;
}

Classification classify_triangulation(const Polygon& poly, const Point& p,
                                      const Tolerance& tol) {
  require_convex(poly);
  const std::size_t n = poly.size();
  detail::NeumaierSum acc;
  for (std::size_t i = 0; i < n; ++i) {
    acc.add(std::abs(triangle_signed2(p, poly[i], poly[(i + 1) % n])));
  }
  const double fan = 0.5 * acc.value();
  const double original = area(poly);
  const double eq = area_equality_tolerance(fan, original, tol);
  if (fan > original + eq) {
    return Classification::Outside;
  }
  if (fan < original - eq) {
    throw InternalInconsistency(
        "triangle fan area fell below the polygon area on convex input");
  }
  return is_point_on_ring(poly, p, tol) ? Classification::OnBoundary
                                        : Classification::Inside;
}

Classification classify_ray_casting(const Polygon& poly, const Point& p,
                                    const Tolerance& tol) {
  if (is_point_on_ring(poly, p, tol)) {
    return Classification::OnBoundary;
  }
  const std::size_t n = poly.size();
  bool odd = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x_cross > p.x) {
        odd = !odd;
      }
    }
  }
  return odd ? Classification::Inside : Classification::Outside;
}

double angle_sum(const Polygon& poly, const Point& p) noexcept {
  const std::size_t n = poly.size();
  double total = 0.0;
  double ux = poly[0].x - p.x;
  double uy = poly[0].y - p.y;
  const double first_x = ux;
  const double first_y = uy;
  for (std::size_t i = 0; i < n; ++i) {
    double wx;
    double wy;
    if (i + 1 < n) {
      wx = poly[i + 1].x - p.x;
      wy = poly[i + 1].y - p.y;
    } else {
      wx = first_x;
      wy = first_y;
    }
    total += std::atan2(ux * wy - wx * uy, ux * wx + uy * wy);
    ux = wx;
    uy = wy;
  }
  return total;
}

Classification classify_angle_sum(const Polygon& poly, const Point& p,
                                  const Tolerance& tol) {
  if (is_point_on_ring(poly, p, tol)) {
    return Classification::OnBoundary;
  }
  const double total = angle_sum(poly, p);
  return std::abs(total) > std::numbers::pi ? Classification::Inside
                                            : Classification::Outside;
}

Classification classify_half_plane_oracle(const Polygon& poly, const Point& p,
                                          const Tolerance& tol) {
  require_convex(poly);
  const std::size_t n = poly.size();
  const double exterior_sign = poly.signed_sum() < 0.0 ? -1.0 : 1.0;
  bool on_segment = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    const double side = triangle_signed2(a, p, b);
    const double edge_len = std::hypot(b.x - a.x, b.y - a.y);
    const double eps = distance_tolerance(detail::coord_scale({a, b, p}), tol);
    // side == perpendicular distance to the supporting line times edge_len.
    if (side * exterior_sign > eps * edge_len) {
      return Classification::Outside;
    }
    if (!on_segment &&
        detail::point_segment_distance2(p, a, b) <= eps * eps) {
      on_segment = true;
    }
  }
  return on_segment ? Classification::OnBoundary : Classification::Inside;
}

Classification classify(AlgorithmId algorithm, const Polygon& poly,
                        const Point& p, const Tolerance& tol) {
  switch (algorithm) {
    case AlgorithmId::ExtraVertexAppend:
      return classify_extra_vertex_append(poly, p, tol);
    case AlgorithmId::ExtraVertexBestEdge:
      return classify_extra_vertex_best_edge(poly, p, tol);
    case AlgorithmId::Triangulation:
      return classify_triangulation(poly, p, tol);
    case AlgorithmId::RayCasting:
      return classify_ray_casting(poly, p, tol);
    case AlgorithmId::AngleSum:
      return classify_angle_sum(poly, p, tol);
    case AlgorithmId::HalfPlaneOracle:
      return classify_half_plane_oracle(poly, p, tol);
  }
  throw std::invalid_argument("unknown algorithm id");
}

}  // namespace shoelace
