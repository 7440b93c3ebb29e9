#pragma once

#include <cstdint>
#include <vector>

#include "nestkit/base_sets.hpp"

namespace nestkit {

enum class NestKind { Centre, Outer };

// A nest scales its base set by k^-alpha (centre) or 1 - k^-alpha (outer).
struct NestSpec {
  NestKind kind = NestKind::Centre;
  double alpha = 1.0;
  BaseSet base = Singleton{};
};

void validate(const NestSpec& spec);

// Tail/core split at resolution eps: tail_count isolated outer rings plus
// core_count rings spaced 2*eps that cover the accumulation cluster.
// Guarantees, whenever tail_count >= 1:
//   (t+1)^-a - (t+2)^-a < 2 eps <= t^-a - (t+1)^-a
//   (t+1)^-a <= 2 c eps <= t^-a
// with t = tail_count, c = core_count.
struct SplitIndices {
  std::int64_t tail_count = 0;
  std::int64_t core_count = 0;
  double eps = 0.0;
  double alpha = 0.0;
};

SplitIndices split_indices(double alpha, double eps);

struct RingRadii {
  std::vector<double> tail;
  std::vector<double> core;
};

// Ring radius schedules for the nest at resolution eps in (0, 1/4).
// Centre: tail k^-alpha (decreasing), core 2 k eps (increasing).
// Outer: tail 1 - k^-alpha (increasing, radius 0 dropped),
//        core 1 - 2 k eps (decreasing, nonpositive radii dropped).
RingRadii ring_radii(const NestSpec& spec, double eps);

struct Primitive {
  enum class Kind { Point, Arc };
  Kind kind = Kind::Point;
  double ring_radius = 0.0;
  double angle_lo = 0.0;
  double angle_hi = 0.0; // == angle_lo for points
  bool operator==(const Primitive&) const = default;
};

// Flat list of drawing primitives; the countable unit of the estimators.
struct Scene {
  std::vector<Primitive> primitives;
  double eps = 0.0;
};

// Deterministic primitive list for the nest at resolution eps in (0, 1/4).
// The per-ring base resolution follows the chord-to-angle conversion: a
// chord of 2*eps at radius rho subtends roughly 2*eps/rho.
Scene generate_scene(const NestSpec& spec, double eps);

// Sum over primitives with each arc weighted ceil(arc_length / (2*eps)), so
// that arcs and points contribute at commensurate eps-scale.
std::int64_t weighted_primitive_count(const Scene& scene);

std::int64_t primitive_count(const NestSpec& spec, double eps);

} // namespace nestkit
