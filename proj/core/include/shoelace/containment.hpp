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

#include "shoelace/classify.hpp"
#include "shoelace/geom.hpp"

namespace shoelace {

/// True iff closed segments ab and cd share at least one point, including
/// collinear overlap and endpoint touches. Decided with orientation tests
/// plus on-segment checks for exactly-zero orientations.
/// Throws DegenerateInput when a segment has zero length.
bool segments_intersect(const Point& a, const Point& b, const Point& c,
                        const Point& d);

/// True iff both endpoints classify Inside or OnBoundary; for a convex
/// polygon the whole segment then lies in the closed region.
/// Throws NotConvex for non-convex polygons.
bool segment_inside(const Polygon& poly, const Point& a, const Point& b,
                    const Tolerance& tol);

/// True iff every vertex of `inner` classifies Inside or OnBoundary against
/// `outer`. The inner ring may be any validated polygon; a convex outer then
/// contains the whole inner region. Boundary contact counts as contained.
/// Throws NotConvex when `outer` is not convex.
bool polygon_inside(const Polygon& outer, const Polygon& inner,
                    const Tolerance& tol);

}  // namespace shoelace
