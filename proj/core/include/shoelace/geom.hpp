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

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "shoelace/errors.hpp"

namespace shoelace {

/// A 2-D point in double precision.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Winding direction of a vertex ring. Under the x_a*y_b - x_b*y_a cross
/// convention a clockwise ring has a negative signed sum.
enum class Orientation { Clockwise, CounterClockwise };

/// Comparison tolerances. abs_eps is in area units, rel_eps is dimensionless,
/// angle_eps is in radians. All must be strictly positive and finite.
struct Tolerance {
  double abs_eps = 1e-9;
  double rel_eps = 1e-12;
  double angle_eps = 1e-6;
};

/// True iff every field of `tol` is strictly positive and finite.
bool valid(const Tolerance& tol) noexcept;

/// Equality band for comparing two areas: abs_eps + rel_eps * max(a0, a1).
inline double area_equality_tolerance(double a0, double a1,
                                      const Tolerance& tol) noexcept {
  return tol.abs_eps + tol.rel_eps * std::max(a0, a1);
}

/// Distance band derived from `tol` at a given coordinate magnitude.
inline double distance_tolerance(double coord_scale,
                                 const Tolerance& tol) noexcept {
  return tol.abs_eps + tol.rel_eps * coord_scale;
}

/// Pairwise determinant x_a*y_b - x_b*y_a.
inline double cross_det(const Point& a, const Point& b) noexcept {
  return a.x * b.y - b.x * a.y;
}

/// Twice the signed area of triangle abc: positive when abc is
/// counter-clockwise, negative when clockwise, zero when collinear.
inline double triangle_signed2(const Point& a, const Point& b,
                               const Point& c) noexcept {
  return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
}

/// Raw cyclic shoelace sum over the ring (not halved, not absolute).
/// Negative for clockwise rings. The summands are evaluated relative to the
/// first vertex and accumulated with compensated summation, which keeps the
/// result stable for rings far from the origin. For a 3-vertex ring the
/// result is bit-identical to triangle_signed2.
///
/// Throws DegenerateInput when fewer than 3 vertices are given.
double shoelace_signed_sum(std::span<const Point> ring);

/// A validated, immutable vertex ring. Construction computes and caches the
/// signed shoelace sum, the orientation and the convexity flag. Vertex order
/// is preserved exactly as given.
class Polygon {
 public:
  /// Validates the ring. Throws DegenerateInput when the ring has fewer than
  /// 3 vertices, a non-finite coordinate, two equal consecutive vertices
  /// (including last/first) or a zero signed sum. Non-convex rings are
  /// accepted; `is_convex()` records the flag.
  explicit Polygon(std::vector<Point> ring);

  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Point& operator[](std::size_t i) const noexcept { return vertices_[i]; }

  /// Cached raw shoelace sum of the ring.
  double signed_sum() const noexcept { return signed_sum_; }
  Orientation orientation() const noexcept { return orientation_; }

  /// True iff every consecutive vertex triple turns the same way (collinear
  /// triples allowed) and the ring winds exactly once.
  bool is_convex() const noexcept { return convex_; }

 private:
  std::vector<Point> vertices_;
  double signed_sum_ = 0.0;
  Orientation orientation_ = Orientation::CounterClockwise;
  bool convex_ = false;
};

/// Validates a raw vertex list into a Polygon. Same contract as the
/// Polygon constructor.
inline Polygon validate(std::vector<Point> ring) {
  return Polygon(std::move(ring));
}

/// Polygon area: half the absolute shoelace sum. Strictly positive for any
/// validated polygon.
inline double area(const Polygon& poly) noexcept {
  return 0.5 * std::abs(poly.signed_sum());
}

/// Euclidean distance from p to the nearest point of the ring boundary.
double distance_to_ring(const Polygon& poly, const Point& p) noexcept;

/// True iff p lies within the derived distance band of some edge segment:
/// collinear within tolerance and inside the segment's span. Points on an
/// edge's supporting line but beyond the segment do not count.
bool is_point_on_ring(const Polygon& poly, const Point& p,
                      const Tolerance& tol) noexcept;

/// Axis-aligned bounding box of the ring.
struct Bounds {
  Point min;
  Point max;
};

Bounds bounds(const Polygon& poly) noexcept;

/// Diagonal length of a bounding box; upper bound for the polygon diameter.
inline double diagonal(const Bounds& b) noexcept {
  return std::hypot(b.max.x - b.min.x, b.max.y - b.min.y);
}

namespace detail {

/// Neumaier compensated accumulator.
class NeumaierSum {
 public:
  void add(double value) noexcept {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      comp_ += (sum_ - t) + value;
    } else {
      comp_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Squared distance from p to segment ab. The segment must have nonzero
/// length.
double point_segment_distance2(const Point& p, const Point& a,
                               const Point& b) noexcept;

/// Largest coordinate magnitude among the given points.
double coord_scale(std::initializer_list<Point> pts) noexcept;

}  // namespace detail

}  // namespace shoelace
