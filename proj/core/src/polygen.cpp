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

#include "shoelace/polygen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "shoelace/classify.hpp"

namespace shoelace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxTries = 64;

void check_config(const GenConfig& cfg) {
  if (cfg.n < 3) {
    throw std::invalid_argument("gen_convex: n must be at least 3");
  }
  if (!(cfg.radius > 0.0) || !std::isfinite(cfg.radius)) {
    throw std::invalid_argument("gen_convex: radius must be positive");
  }
  if (!(cfg.jitter >= 0.0 && cfg.jitter < 0.5)) {
    throw std::invalid_argument("gen_convex: jitter must be in [0, 0.5)");
  }
}

Point vertex_centroid(const Polygon& poly) {
  double cx = 0.0;
  double cy = 0.0;
  for (const Point& v : poly.vertices()) {
    cx += v.x;
    cy += v.y;
  }
  const double n = static_cast<double>(poly.size());
  return {cx / n, cy / n};
}

Point boundary_point(const Polygon& poly, SplitMix64& rng, double u_lo,
                     double u_hi) {
  const std::size_t i = rng.below(poly.size());
  const Point& a = poly[i];
  const Point& b = poly[(i + 1) % poly.size()];
  const double u = rng.uniform(u_lo, u_hi);
  return {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
}

}  // namespace

Polygon gen_convex(const GenConfig& cfg) {
  check_config(cfg);
  SplitMix64 rng(cfg.seed);
  const std::size_t n = static_cast<std::size_t>(cfg.n);

  // Angular gaps: a guaranteed minimum plus an exponentially distributed
  // share of the remainder, so the gaps sum to one revolution.
  const double min_gap = (kTwoPi / static_cast<double>(n)) * 0.1;
  std::vector<double> gaps(n);
  double gap_total = 0.0;
  for (double& g : gaps) {
    g = -std::log(1.0 - rng.next_double());
    gap_total += g;
  }
  const double spare = kTwoPi - static_cast<double>(n) * min_gap;
  const double start = rng.uniform(0.0, kTwoPi);

  // Affine distortion: positive-determinant shear/scale plus rotation and
  // translation. Determinant is sx*sy > 0 because jitter < 0.5.
  const double sx = 1.0 + rng.uniform(-cfg.jitter, cfg.jitter);
  const double sy = 1.0 + rng.uniform(-cfg.jitter, cfg.jitter);
  const double shear = rng.uniform(-cfg.jitter, cfg.jitter);
  const double rot = rng.uniform(0.0, kTwoPi);
  const double cr = std::cos(rot);
  const double sr = std::sin(rot);
  const double dx = rng.uniform(-cfg.radius, cfg.radius);
  const double dy = rng.uniform(-cfg.radius, cfg.radius);

  std::vector<Point> ring;
  ring.reserve(n);
  double angle = start;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      angle += min_gap + gaps[i - 1] * spare / gap_total;
    }
    const double px = cfg.radius * std::cos(angle);
    const double py = cfg.radius * std::sin(angle);
    const double qx = sx * px + shear * py;
    const double qy = sy * py;
    ring.push_back({cr * qx - sr * qy + dx, sr * qx + cr * qy + dy});
  }
  if (cfg.orientation == Orientation::Clockwise) {
    std::reverse(ring.begin(), ring.end());
  }
  return Polygon(std::move(ring));
}

Point gen_point_inside(const Polygon& poly, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t n = poly.size();
  const Tolerance tol;
  for (int tries = 0; tries < kMaxTries; ++tries) {
    std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    std::size_t k = rng.below(n - 2);
    if (k >= std::min(i, j)) ++k;
    if (k >= std::max(i, j)) ++k;

    const double u0 = rng.next_double();
    const double u1 = rng.next_double();
    const double u2 = rng.next_double();
    const double total = u0 + u1 + u2;
    double w0 = 0.05 + 0.85 * (total > 0.0 ? u0 / total : 1.0 / 3.0);
    double w1 = 0.05 + 0.85 * (total > 0.0 ? u1 / total : 1.0 / 3.0);
    const double w2 = 1.0 - w0 - w1;

    const Point p{w0 * poly[i].x + w1 * poly[j].x + w2 * poly[k].x,
                  w0 * poly[i].y + w1 * poly[j].y + w2 * poly[k].y};
    if (classify_half_plane_oracle(poly, p, tol) == Classification::Inside) {
      return p;
    }
  }
  throw InternalInconsistency("gen_point_inside failed its oracle check");
}

Point gen_point_outside(const Polygon& poly, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const Point c = vertex_centroid(poly);
  const Tolerance tol;
  for (int tries = 0; tries < kMaxTries; ++tries) {
    const Point b = boundary_point(poly, rng, 0.0, 1.0);
    const double t = rng.uniform(1.1, 3.0);
    const Point p{c.x + t * (b.x - c.x), c.y + t * (b.y - c.y)};
    if (classify_half_plane_oracle(poly, p, tol) == Classification::Outside) {
      return p;
    }
  }
  throw InternalInconsistency("gen_point_outside failed its oracle check");
}

Point gen_point_on_edge(const Polygon& poly, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return boundary_point(poly, rng, 0.1, 0.9);
}

}  // namespace shoelace
