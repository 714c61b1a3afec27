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

#include "shoelace/geom.hpp"

namespace shoelace {

/// Deterministic 64-bit generator (splitmix64). Hand-rolled so that streams
/// are identical across standard libraries; <random> distributions are not
/// portable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * next_double();
  }

  /// Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

/// Deterministic mix of a seed with a stream index; used to derive
/// independent sub-streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  return rng.next();
}

/// Configuration for the convex polygon generator.
struct GenConfig {
  int n = 3;                 ///< vertex count, >= 3
  std::uint64_t seed = 0;
  double radius = 100.0;     ///< base circle radius, > 0
  double jitter = 0.25;      ///< affine distortion magnitude, in [0, 0.5)
  Orientation orientation = Orientation::Clockwise;
};

/// Generates a validated convex polygon with exactly cfg.n vertices,
/// deterministic per seed. Vertices are placed on a circle at sorted random
/// angles with a minimum gap of (2*pi/n)*0.1, then mapped through a random
/// positive-determinant affine shear/scale/rotation plus a translation;
/// affine maps preserve convexity. cfg.jitter scales the shear and the
/// anisotropic stretch.
/// Throws std::invalid_argument for an invalid configuration.
Polygon gen_convex(const GenConfig& cfg);

/// A point the half-plane oracle labels Inside: a random convex combination
/// of three distinct vertices with every weight at least 0.05. The oracle
/// check is enforced before returning.
Point gen_point_inside(const Polygon& poly, std::uint64_t seed);

/// A point the half-plane oracle labels Outside: a random boundary point b
/// pushed away from the vertex centroid by a factor t in [1.1, 3]. The
/// oracle check is enforced before returning.
Point gen_point_outside(const Polygon& poly, std::uint64_t seed);

/// A point on a random edge, interpolated with u in [0.1, 0.9].
Point gen_point_on_edge(const Polygon& poly, std::uint64_t seed);

}  // namespace shoelace
