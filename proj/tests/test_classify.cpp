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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "shoelace/classify.hpp"
#include "shoelace/polygen.hpp"
#include "support.hpp"

using namespace shoelace;
using namespace shoelace::test;

namespace {

const Tolerance kTol;

Polygon square() { return Polygon(square_cw()); }

}  // namespace

TEST_CASE("algorithm names round-trip") {
  for (AlgorithmId id : all_algorithms()) {
    CHECK(parse_algorithm(name(id)) == id);
  }
  CHECK_FALSE(parse_algorithm("no-such-algorithm").has_value());
  CHECK(name(AlgorithmId::ExtraVertexBestEdge) == "extra-vertex");
  CHECK(name(AlgorithmId::ExtraVertexAppend) == "extra-vertex-append");
}

TEST_CASE("insertion_delta hand values") {
  const Polygon poly = square();
  // Closing edge (1,0) -> (0,0).
  CHECK(insertion_delta(poly, 3, {2, 0.5}) == 0.5);
  CHECK(insertion_delta(poly, 0, {0, 0}) == 0.0);
  // Left edge (0,0) -> (0,1); the inserted point shrinks the ring.
  CHECK(insertion_delta(poly, 0, {0.5, 0.5}) == 0.5);
  CHECK_THROWS_AS(insertion_delta(poly, 4, {0, 0}), BadIndex);
}

TEST_CASE("insertion_delta matches triangle_signed2 and the raw determinant form") {
  SplitMix64 rng(42);
  for (int i = 0; i < 500; ++i) {
    GenConfig cfg;
    cfg.n = 3 + static_cast<int>(rng.below(30));
    cfg.seed = rng.next();
    const Polygon poly = gen_convex(cfg);
    const std::size_t edge = rng.below(poly.size());
    const Point p{rng.uniform(-300, 300), rng.uniform(-300, 300)};
    const Point& a = poly[edge];
    const Point& b = poly[(edge + 1) % poly.size()];

    const double delta = insertion_delta(poly, edge, p);
    CHECK(delta == triangle_signed2(a, p, b));

    const double raw = cross_det(a, p) + cross_det(p, b) - cross_det(a, b);
    CHECK(delta == doctest::Approx(raw).epsilon(1e-12));
  }
}

TEST_CASE("area_with_insertion hand values") {
  const Polygon poly = square();
  CHECK(area_with_insertion(poly, 3, {0.5, 5}) ==
        doctest::Approx(1.5).epsilon(1e-14));
  CHECK(area_with_insertion(poly, 3, {2, 0.5}) ==
        doctest::Approx(0.75).epsilon(1e-14));
  CHECK(area_with_insertion(poly, 3, {0.5, 0}) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(area_with_insertion(poly, 9, {0, 0}), BadIndex);
}

TEST_CASE("area_with_insertion equals shoelace over the spliced list bitwise") {
  SplitMix64 rng(7);
  for (int i = 0; i < 500; ++i) {
    GenConfig cfg;
    cfg.n = 3 + static_cast<int>(rng.below(40));
    cfg.seed = rng.next();
    const Polygon poly = gen_convex(cfg);
    const std::size_t edge = rng.below(poly.size());
    const Point p{rng.uniform(-300, 300), rng.uniform(-300, 300)};

    std::vector<Point> spliced = poly.vertices();
    spliced.insert(spliced.begin() + static_cast<std::ptrdiff_t>(edge) + 1, p);
    CHECK(area_with_insertion(poly, edge, p) ==
          0.5 * std::abs(shoelace_signed_sum(spliced)));
  }
}

TEST_CASE("delta identity: incremental equals full recomputation") {
  SplitMix64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    GenConfig cfg;
    cfg.n = 3 + static_cast<int>(rng.below(62));
    cfg.seed = rng.next();
    const Polygon poly = gen_convex(cfg);
    const std::size_t edge = rng.below(poly.size());
    const Point p{rng.uniform(-500, 500), rng.uniform(-500, 500)};

    const double full = area_with_insertion(poly, edge, p);
    const double incremental =
        0.5 * std::abs(poly.signed_sum() + insertion_delta(poly, edge, p));
    const double scale =
        std::max({full, incremental, 1e-3 * area(poly)});
    CHECK(std::abs(full - incremental) <= 1e-9 * scale);
  }
}

TEST_CASE("append variant hand values, including its documented divergence") {
  const Polygon poly = square();
  CHECK(classify_extra_vertex_append(poly, {0.5, 0.5}, kTol) ==
        Classification::Inside);
  CHECK(classify_extra_vertex_append(poly, {0.5, 5}, kTol) ==
        Classification::Outside);
  // (2, 0.5) lies outside, but on the interior side of the closing edge's
  // supporting line, so the append placement reports Inside.
  CHECK(classify_extra_vertex_append(poly, {2, 0.5}, kTol) ==
        Classification::Inside);
  CHECK(classify_half_plane_oracle(poly, {2, 0.5}, kTol) ==
        Classification::Outside);
  // On the closing edge itself the area is unchanged.
  CHECK(classify_extra_vertex_append(poly, {0.5, 0}, kTol) ==
        Classification::OnBoundary);
}

TEST_CASE("append variant answer depends on the ring rotation") {
  const Point witness{2, 0.5};
  CHECK(classify_extra_vertex_append(Polygon(square_cw()), witness, kTol) ==
        Classification::Inside);
  // Rotating the listing moves the closing edge; the same point flips.
  CHECK(classify_extra_vertex_append(Polygon(rotated(square_cw(), 3)), witness,
                                     kTol) == Classification::Outside);
}

TEST_CASE("best-edge variant hand values") {
  const Polygon poly = square();
  CHECK(classify_extra_vertex_best_edge(poly, {2, 0.5}, kTol) ==
        Classification::Outside);
  CHECK(classify_extra_vertex_best_edge(poly, {0.5, 0.5}, kTol) ==
        Classification::Inside);
  CHECK(classify_extra_vertex_best_edge(poly, {1, 0.5}, kTol) ==
        Classification::OnBoundary);
  CHECK(classify_extra_vertex_best_edge(poly, {0, 0}, kTol) ==
        Classification::OnBoundary);
}

TEST_CASE("triangulation hand values") {
  const Polygon poly = square();
  CHECK(classify_triangulation(poly, {0.5, 0.5}, kTol) ==
        Classification::Inside);
  CHECK(classify_triangulation(poly, {2, 0.5}, kTol) ==
        Classification::Outside);
  CHECK(classify_triangulation(poly, {0.5, 0}, kTol) ==
        Classification::OnBoundary);
}

TEST_CASE("triangulation fan sum doubles for a known outside point") {
  // Four triangles fanned from (2, 0.5) over the unit square sum to 2.
  const Polygon poly = square();
  const Point p{2, 0.5};
  double fan = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    fan += 0.5 * std::abs(triangle_signed2(p, poly[i],
                                           poly[(i + 1) % poly.size()]));
  }
  CHECK(fan == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("ray casting hand values") {
  const Polygon poly = square();
  CHECK(classify_ray_casting(poly, {0.5, 0.5}, kTol) == Classification::Inside);
  CHECK(classify_ray_casting(poly, {2, 0.5}, kTol) == Classification::Outside);
  // Ray at the level of the top edge vertices: the half-open rule counts
  // 0 or 2 crossings, never 1.
  CHECK(classify_ray_casting(poly, {-1, 1}, kTol) == Classification::Outside);
  CHECK(classify_ray_casting(poly, {0.5, 0}, kTol) ==
        Classification::OnBoundary);
}

TEST_CASE("ray casting works on concave polygons") {
  const Polygon concave(dart());
  CHECK(classify_ray_casting(concave, {2.5, 1.5}, kTol) ==
        Classification::Outside);  // inside the notch
  CHECK(classify_ray_casting(concave, {1, 0.25}, kTol) ==
        Classification::Inside);
  CHECK(classify_ray_casting(concave, {5, 5}, kTol) ==
        Classification::Outside);
}

TEST_CASE("angle sum hand values and sign convention") {
  const Polygon poly = square();
  CHECK(classify_angle_sum(poly, {0.5, 0.5}, kTol) == Classification::Inside);
  CHECK(classify_angle_sum(poly, {5, 5}, kTol) == Classification::Outside);
  CHECK(classify_angle_sum(poly, {0.5, 0}, kTol) ==
        Classification::OnBoundary);
  // Clockwise listing: the winding sum at an interior point is -2*pi.
  CHECK(angle_sum(poly, {0.5, 0.5}) ==
        doctest::Approx(-2.0 * M_PI).epsilon(1e-9));
  CHECK(angle_sum(Polygon(square_ccw()), {0.5, 0.5}) ==
        doctest::Approx(2.0 * M_PI).epsilon(1e-9));
  CHECK(std::abs(angle_sum(poly, {5, 5})) < kTol.angle_eps);
}

TEST_CASE("half-plane oracle hand values") {
  const Polygon poly = square();
  CHECK(classify_half_plane_oracle(poly, {0.5, 0.5}, kTol) ==
        Classification::Inside);
  CHECK(classify_half_plane_oracle(poly, {2, 0.5}, kTol) ==
        Classification::Outside);
  CHECK(classify_half_plane_oracle(poly, {1, 0.5}, kTol) ==
        Classification::OnBoundary);
  CHECK(classify_half_plane_oracle(poly, {1.5, 0}, kTol) ==
        Classification::Outside);  // collinear with an edge, beyond its span
}

TEST_CASE("convexity-restricted classifiers reject concave input") {
  const Polygon concave(dart());
  const Point p{1, 0.25};
  CHECK_THROWS_AS(classify_extra_vertex_append(concave, p, kTol), NotConvex);
  CHECK_THROWS_AS(classify_extra_vertex_best_edge(concave, p, kTol), NotConvex);
  CHECK_THROWS_AS(classify_triangulation(concave, p, kTol), NotConvex);
  CHECK_THROWS_AS(classify_half_plane_oracle(concave, p, kTol), NotConvex);
  // The baselines accept any simple polygon.
  CHECK(classify_ray_casting(concave, p, kTol) == Classification::Inside);
  CHECK(classify_angle_sum(concave, p, kTol) == Classification::Inside);
}

TEST_CASE("interior fan area equals polygon area; outside fans exceed it") {
  SplitMix64 rng(1234);
  for (int i = 0; i < 500; ++i) {
    GenConfig cfg;
    cfg.n = 3 + static_cast<int>(rng.below(62));
    cfg.seed = rng.next();
    const Polygon poly = gen_convex(cfg);
    const double a = area(poly);

    const Point inside = gen_point_inside(poly, rng.next());
    double fan_in = 0.0;
    for (std::size_t e = 0; e < poly.size(); ++e) {
      fan_in += 0.5 * std::abs(triangle_signed2(inside, poly[e],
                                                poly[(e + 1) % poly.size()]));
    }
    CHECK(std::abs(fan_in - a) <= 1e-12 * a + kTol.abs_eps);

    const Point outside = gen_point_outside(poly, rng.next());
    double fan_out = 0.0;
    for (std::size_t e = 0; e < poly.size(); ++e) {
      fan_out += 0.5 * std::abs(triangle_signed2(outside, poly[e],
                                                 poly[(e + 1) % poly.size()]));
    }
    CHECK(fan_out > a + area_equality_tolerance(fan_out, a, kTol));
  }
}

TEST_CASE("classifiers agree with the oracle away from the boundary") {
  SplitMix64 rng(2718);
  const AlgorithmId checked[] = {
      AlgorithmId::ExtraVertexBestEdge, AlgorithmId::Triangulation,
      AlgorithmId::RayCasting, AlgorithmId::AngleSum};
  int disagreements = 0;
  for (int i = 0; i < 2000; ++i) {
    GenConfig cfg;
    cfg.n = 3 + static_cast<int>(rng.below(62));
    cfg.seed = rng.next();
    const Polygon poly = gen_convex(cfg);
    const double band = 1e-6 * diagonal(bounds(poly));

    Point p{};
    switch (i % 3) {
      case 0:
        p = gen_point_inside(poly, rng.next());
        break;
      case 1:
        p = gen_point_outside(poly, rng.next());
        break;
      default:
        p = gen_point_on_edge(poly, rng.next());
        break;
    }
    if (i % 3 != 2 && distance_to_ring(poly, p) <= band) {
      continue;
    }
    const Classification expected = classify_half_plane_oracle(poly, p, kTol);
    for (AlgorithmId alg : checked) {
      if (classify(alg, poly, p, kTol) != expected) {
        ++disagreements;
      }
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("classification is orientation neutral") {
  SplitMix64 rng(31415);
  for (int i = 0; i < 300; ++i) {
    GenConfig cfg;
    cfg.n = 3 + static_cast<int>(rng.below(30));
    cfg.seed = rng.next();
    const Polygon poly = gen_convex(cfg);
    const Polygon flipped(reversed(poly.vertices()));
    const Point p = (i % 2 == 0) ? gen_point_inside(poly, rng.next())
                                 : gen_point_outside(poly, rng.next());
    for (AlgorithmId alg : all_algorithms()) {
      CHECK(classify(alg, poly, p, kTol) == classify(alg, flipped, p, kTol));
    }
  }
}

TEST_CASE("classification is rotation neutral except for the append variant") {
  SplitMix64 rng(161803);
  const AlgorithmId rotation_neutral[] = {
      AlgorithmId::ExtraVertexBestEdge, AlgorithmId::Triangulation,
      AlgorithmId::RayCasting, AlgorithmId::AngleSum,
      AlgorithmId::HalfPlaneOracle};
  for (int i = 0; i < 300; ++i) {
    GenConfig cfg;
    cfg.n = 3 + static_cast<int>(rng.below(30));
    cfg.seed = rng.next();
    const Polygon poly = gen_convex(cfg);
    const Polygon turned(rotated(poly.vertices(), 1 + rng.below(poly.size() - 1)));
    const Point p = (i % 2 == 0) ? gen_point_inside(poly, rng.next())
                                 : gen_point_outside(poly, rng.next());
    for (AlgorithmId alg : rotation_neutral) {
      CHECK(classify(alg, poly, p, kTol) == classify(alg, turned, p, kTol));
    }
  }
}
