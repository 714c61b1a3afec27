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

#include "shoelace/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace shoelace {

bool valid(const Tolerance& tol) noexcept {
  const auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  return ok(tol.abs_eps) && ok(tol.rel_eps) && ok(tol.angle_eps);
}

double shoelace_signed_sum(std::span<const Point> ring) {
  const std::size_t n = ring.size();
  if (n < 3) {
    throw DegenerateInput("shoelace sum needs at least 3 vertices");
  }
  // Coordinates are taken relative to the first vertex; the wraparound terms
  // that touch it contribute exact zeros.
  const Point origin = ring[0];
  detail::NeumaierSum acc;
  double ax = ring[0].x - origin.x;
  double ay = ring[0].y - origin.y;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& next = ring[(i + 1) % n];
    const double bx = next.x - origin.x;
    const double by = next.y - origin.y;
    acc.add(ax * by - bx * ay);
    ax = bx;
    ay = by;
  }
  return acc.value();
}

namespace {

bool finite(const Point& p) noexcept {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

// Convex iff all consecutive turns share a sign (collinear allowed) and the
// total turning angle is one full revolution. The winding check rejects
// rings that wrap more than once with uniformly signed turns.
bool compute_convex(const std::vector<Point>& v) noexcept {
  const std::size_t n = v.size();
  int ref_sign = 0;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    const Point& c = v[(i + 2) % n];
    const double cross = triangle_signed2(a, b, c);
    const int sign = (cross > 0.0) - (cross < 0.0);
    if (sign != 0) {
      if (ref_sign == 0) {
        ref_sign = sign;
      } else if (sign != ref_sign) {
        return false;
      }
    }
    const double ux = b.x - a.x;
    const double uy = b.y - a.y;
    const double wx = c.x - b.x;
    const double wy = c.y - b.y;
    turning += std::atan2(ux * wy - wx * uy, ux * wx + uy * wy);
  }
  const long winding = std::lround(turning / (2.0 * std::numbers::pi));
  return winding == 1 || winding == -1;
}

}  // namespace

Polygon::Polygon(std::vector<Point> ring) : vertices_(std::move(ring)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw DegenerateInput("polygon needs at least 3 vertices");
  }
  for (const Point& p : vertices_) {
    if (!finite(p)) {
      throw DegenerateInput("polygon has a non-finite coordinate");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i] == vertices_[(i + 1) % n]) {
      throw DegenerateInput("polygon repeats a consecutive vertex");
    }
  }
  signed_sum_ = shoelace_signed_sum(vertices_);
  if (signed_sum_ == 0.0) {
    throw DegenerateInput("polygon has zero signed area");
  }
  orientation_ = signed_sum_ < 0.0 ? Orientation::Clockwise
                                   : Orientation::CounterClockwise;
  convex_ = compute_convex(vertices_);
}

namespace detail {

double point_segment_distance2(const Point& p, const Point& a,
                               const Point& b) noexcept {
  const double ux = b.x - a.x;
  const double uy = b.y - a.y;
  const double wx = p.x - a.x;
  const double wy = p.y - a.y;
  const double len2 = ux * ux + uy * uy;
  double t = (wx * ux + wy * uy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = wx - t * ux;
  const double dy = wy - t * uy;
  return dx * dx + dy * dy;
}

double coord_scale(std::initializer_list<Point> pts) noexcept {
  double scale = 0.0;
  for (const Point& p : pts) {
    scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  }
  return scale;
}

}  // namespace detail

double distance_to_ring(const Polygon& poly, const Point& p) noexcept {
  const std::size_t n = poly.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(
        best, detail::point_segment_distance2(p, poly[i], poly[(i + 1) % n]));
  }
  return std::sqrt(best);
}

bool is_point_on_ring(const Polygon& poly, const Point& p,
                      const Tolerance& tol) noexcept {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    const double eps =
        distance_tolerance(detail::coord_scale({a, b, p}), tol);
    if (detail::point_segment_distance2(p, a, b) <= eps * eps) {
      return true;
    }
  }
  return false;
}

Bounds bounds(const Polygon& poly) noexcept {
  Bounds b{poly[0], poly[0]};
  for (const Point& p : poly.vertices()) {
    b.min.x = std::min(b.min.x, p.x);
    b.min.y = std::min(b.min.y, p.y);
    b.max.x = std::max(b.max.x, p.x);
    b.max.y = std::max(b.max.y, p.y);
  }
  return b;
}

}  // namespace shoelace
