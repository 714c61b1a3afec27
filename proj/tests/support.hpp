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

#include <algorithm>
#include <cmath>
#include <vector>

#include "shoelace/geom.hpp"

namespace shoelace::test {

// The unit square listed clockwise: up, right, down, left.
inline std::vector<Point> square_cw() {
  return {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
}

inline std::vector<Point> square_ccw() {
  return {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
}

// Right triangle with legs 4 and 3, counter-clockwise.
inline std::vector<Point> triangle_430() {
  return {{0, 0}, {4, 0}, {0, 3}};
}

// Concave quadrilateral; the corner at (2, 1) is reflex.
inline std::vector<Point> dart() {
  return {{0, 0}, {4, 0}, {2, 1}, {2, 3}};
}

inline std::vector<Point> regular_ngon(int n, double radius) {
  std::vector<Point> ring;
  ring.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * M_PI * static_cast<double>(k) / n;
    ring.push_back({radius * std::cos(angle), radius * std::sin(angle)});
  }
  return ring;
}

// Independent fan-area oracle: sums |triangle| areas anchored at vertex 0
// using plain arithmetic, no library calls. For convex rings this equals the
// polygon area.
inline double fan_area_from_vertex0(const std::vector<Point>& ring) {
  double total = 0.0;
  const Point& a = ring[0];
  for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
    const Point& b = ring[i];
    const Point& c = ring[i + 1];
    const double twice =
        (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
    total += 0.5 * std::abs(twice);
  }
  return total;
}

inline std::vector<Point> rotated(std::vector<Point> ring, std::size_t k) {
  std::rotate(ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(k % ring.size()),
              ring.end());
  return ring;
}

inline std::vector<Point> reversed(std::vector<Point> ring) {
  std::reverse(ring.begin(), ring.end());
  return ring;
}

inline std::vector<Point> translated(std::vector<Point> ring, double dx,
                                     double dy) {
  for (Point& p : ring) {
    p.x += dx;
    p.y += dy;
  }
  return ring;
}

inline std::vector<Point> scaled(std::vector<Point> ring, double s) {
  for (Point& p : ring) {
    p.x *= s;
    p.y *= s;
  }
  return ring;
}

}  // namespace shoelace::test
