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

#include "shoelace/containment.hpp"

#include <algorithm>

namespace shoelace {

namespace {

// q is collinear with segment ab; true iff q lies within ab's bounding box.
bool on_collinear_segment(const Point& a, const Point& b, const Point& q) {
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

bool in_closed_region(const Polygon& poly, const Point& p,
                      const Tolerance& tol) {
  return classify_extra_vertex_best_edge(poly, p, tol) !=
         Classification::Outside;
}

}  // namespace

bool segments_intersect(const Point& a, const Point& b, const Point& c,
                        const Point& d) {
  if (a == b || c == d) {
    throw DegenerateInput("zero-length segment");
  }
  const double d1 = triangle_signed2(c, d, a);
  const double d2 = triangle_signed2(c, d, b);
  const double d3 = triangle_signed2(a, b, c);
  const double d4 = triangle_signed2(a, b, d);
  if (((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
      ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))) {
    return true;
  }
  if (d1 == 0.0 && on_collinear_segment(c, d, a)) return true;
  if (d2 == 0.0 && on_collinear_segment(c, d, b)) return true;
  if (d3 == 0.0 && on_collinear_segment(a, b, c)) return true;
  if (d4 == 0.0 && on_collinear_segment(a, b, d)) return true;
  return false;
}

bool segment_inside(const Polygon& poly, const Point& a, const Point& b,
                    const Tolerance& tol) {
  return in_closed_region(poly, a, tol) && in_closed_region(poly, b, tol);
}

bool polygon_inside(const Polygon& outer, const Polygon& inner,
                    const Tolerance& tol) {
  for (const Point& v : inner.vertices()) {
    if (!in_closed_region(outer, v, tol)) {
      return false;
    }
  }
  return true;
}

}  // namespace shoelace
