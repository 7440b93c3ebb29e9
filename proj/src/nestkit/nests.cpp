#include "nestkit/nests.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nestkit {

namespace {

// m^-a - (m+1)^-a without cancellation for large m.
double ring_gap(double alpha, double m) {
  return -std::pow(m, -alpha) * std::expm1(-alpha * std::log1p(1.0 / m));
}

constexpr std::int64_t kIndexCap = std::int64_t{1} << 50;

void check_scene_eps(double eps) {
  if (!(eps > 0.0) || !(eps < 0.25)) {
    throw std::invalid_argument("nest resolution eps must lie in (0, 1/4)");
  }
}

} // namespace

void validate(const NestSpec& spec) {
  if (!(spec.alpha > 0.0)) {
    throw std::invalid_argument("nest exponent alpha must be positive");
  }
  validate(spec.base);
}

SplitIndices split_indices(double alpha, double eps) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("split_indices: alpha must be positive");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("split_indices: eps must be positive");
  }
  const double spacing = 2.0 * eps;

  std::int64_t tail = 0;
  if (ring_gap(alpha, 1.0) >= spacing) {
    // gaps decrease strictly in m; bracket the last m with gap >= 2 eps,
    // galloping out from the asymptotic root of alpha m^-(alpha+1) = 2 eps
    std::int64_t lo = 1;
    std::int64_t hi = 2;
    const double ideal = std::pow(alpha / spacing, 1.0 / (alpha + 1.0));
    if (ideal > 2.0) {
      const auto pivot = static_cast<std::int64_t>(std::min(ideal, 8.0e15));
      if (ring_gap(alpha, static_cast<double>(pivot)) >= spacing) {
        lo = pivot;
        hi = pivot * 2;
      } else {
        hi = pivot;
        std::int64_t step = pivot / 2;
        while (step > 1 &&
               ring_gap(alpha, static_cast<double>(step)) < spacing) {
          hi = step;
          step /= 2;
        }
        lo = std::max<std::int64_t>(step, 1);
      }
    }
    while (ring_gap(alpha, static_cast<double>(hi)) >= spacing) {
      lo = hi;
      if (hi > kIndexCap) {
        throw std::runtime_error(
            "split_indices: tail index exceeds the supported range; eps is "
            "too small for this alpha");
      }
      hi *= 2;
    }
    while (lo + 1 < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (ring_gap(alpha, static_cast<double>(mid)) >= spacing) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    tail = lo;
  }

  const double core_top = std::pow(static_cast<double>(tail + 1), -alpha);
  const double cover = core_top / spacing;
  if (!(cover < static_cast<double>(kIndexCap))) {
    throw std::runtime_error(
        "split_indices: core index exceeds the supported range");
  }
  std::int64_t core = static_cast<std::int64_t>(std::ceil(cover));
  if (core < 1) core = 1;
  return {tail, core, eps, alpha};
}

RingRadii ring_radii(const NestSpec& spec, double eps) {
  validate(spec);
  check_scene_eps(eps);
  const SplitIndices split = split_indices(spec.alpha, eps);
  RingRadii radii;
  radii.tail.reserve(static_cast<std::size_t>(split.tail_count));
  radii.core.reserve(static_cast<std::size_t>(split.core_count));
  if (spec.kind == NestKind::Centre) {
    for (std::int64_t k = 1; k <= split.tail_count; ++k) {
      radii.tail.push_back(std::pow(static_cast<double>(k), -spec.alpha));
    }
    for (std::int64_t k = 1; k <= split.core_count; ++k) {
      // the top cover radius may overshoot 1 when the tail is empty
      radii.core.push_back(std::min(2.0 * static_cast<double>(k) * eps, 1.0));
    }
  } else {
    for (std::int64_t k = 1; k <= split.tail_count; ++k) {
      const double rho = 1.0 - std::pow(static_cast<double>(k), -spec.alpha);
      if (rho > 0.0) radii.tail.push_back(rho);
    }
    for (std::int64_t k = 1; k <= split.core_count; ++k) {
      const double rho = 1.0 - 2.0 * static_cast<double>(k) * eps;
      if (rho > 0.0) radii.core.push_back(rho);
    }
  }
  return radii;
}

Scene generate_scene(const NestSpec& spec, double eps) {
  validate(spec);
  check_scene_eps(eps);
  if (const auto* face = std::get_if<CubeFace>(&spec.base);
      face != nullptr && face->face_dim >= 2) {
    throw std::invalid_argument(
        "generate_scene: CubeFace bases with face_dim >= 2 are theory-only "
        "and cannot be generated in the plane");
  }

  const RingRadii radii = ring_radii(spec, eps);
  Scene scene;
  scene.eps = eps;

  // Base resolutions below are per unit of the base parameterisation; they
  // are capped just under 1 so rings too small to resolve the base shrink
  // to the construction's endpoint blobs instead of failing.
  auto cap_resolution = [](double r) { return std::min(r, 1.0 - 1e-9); };

  auto emit_ring = [&](double rho) {
    std::visit(
        [&](const auto& base) {
          using T = std::decay_t<decltype(base)>;
          if constexpr (std::is_same_v<T, Singleton>) {
            scene.primitives.push_back(
                {Primitive::Kind::Point, rho, 0.0, 0.0});
          } else if constexpr (std::is_same_v<T, EAlpha>) {
            for (double x :
                 e_alpha_points(base.alpha, cap_resolution(eps / rho))) {
              scene.primitives.push_back({Primitive::Kind::Point, rho, x, x});
            }
          } else if constexpr (std::is_same_v<T, DBeta>) {
            const double res =
                cap_resolution(4.0 * eps / (std::numbers::pi * rho));
            for (double theta : d_beta_angles(base.beta, res)) {
              scene.primitives.push_back(
                  {Primitive::Kind::Point, rho, theta, theta});
            }
          } else if constexpr (std::is_same_v<T, UniformCantor>) {
            const double cutoff = 4.0 * eps / (std::numbers::pi * rho);
            for (const Interval& seg :
                 cantor_segments(base.copies, base.ratio, cutoff)) {
              scene.primitives.push_back(
                  {Primitive::Kind::Arc, rho,
                   std::numbers::pi / 2.0 * seg.lo,
                   std::numbers::pi / 2.0 * seg.hi});
            }
          } else if constexpr (std::is_same_v<T, FullCircle>) {
            scene.primitives.push_back(
                {Primitive::Kind::Arc, rho, 0.0, 2.0 * std::numbers::pi});
          } else { // CubeFace, face_dim <= 1
            if (base.face_dim == 0) {
              scene.primitives.push_back(
                  {Primitive::Kind::Point, rho, 0.0, 0.0});
            } else {
              scene.primitives.push_back({Primitive::Kind::Arc, rho, 0.0, 1.0});
            }
          }
        },
        spec.base);
  };

  for (double rho : radii.tail) emit_ring(rho);
  for (double rho : radii.core) emit_ring(rho);
  return scene;
}

std::int64_t weighted_primitive_count(const Scene& scene) {
  if (!(scene.eps > 0.0)) {
    throw std::invalid_argument("weighted_primitive_count: scene has no eps");
  }
  std::int64_t total = 0;
  for (const Primitive& prim : scene.primitives) {
    if (prim.kind == Primitive::Kind::Point) {
      total += 1;
    } else {
      const double arc_length =
          prim.ring_radius * (prim.angle_hi - prim.angle_lo);
      total += static_cast<std::int64_t>(
          std::ceil(arc_length / (2.0 * scene.eps)));
    }
  }
  return total;
}

namespace {

// |e_alpha_points(exponent, res)| without materialising the list
std::int64_t representation_size(double exponent, double res) {
  const SplitIndices split = split_indices(exponent, res);
  std::int64_t count = split.tail_count + split.core_count;
  if (split.tail_count >= 1) {
    const double tail_floor =
        std::pow(static_cast<double>(split.tail_count), -exponent);
    const double core_top = std::min(
        2.0 * static_cast<double>(split.core_count) * res, 1.0);
    if (tail_floor == core_top) --count; // junction tie collapses to one point
  }
  return count;
}

// The Cantor refinement is uniform: every branch stops at the same depth, so
// the ring contributes copies^depth identical leaf arcs.  The depth decision
// replays the recursion's own arithmetic.
std::int64_t cantor_ring_count(const UniformCantor& base, double min_len,
                               double rho, double eps) {
  const double gap_fraction =
      (1.0 - base.copies * base.ratio) / static_cast<double>(base.copies - 1);
  double len = 1.0;
  double child = base.ratio * len;
  std::int64_t leaves = 1;
  while (true) {
    leaves *= base.copies;
    if (!(child * gap_fraction > min_len)) break;
    len = child;
    child = base.ratio * len;
    if (leaves > (std::int64_t{1} << 40)) {
      throw std::runtime_error("primitive_count: segment budget exceeded");
    }
  }
  const double arc_length = rho * (std::numbers::pi / 2.0) * child;
  return leaves *
         static_cast<std::int64_t>(std::ceil(arc_length / (2.0 * eps)));
}

} // namespace

std::int64_t primitive_count(const NestSpec& spec, double eps) {
  validate(spec);
  check_scene_eps(eps);
  if (const auto* face = std::get_if<CubeFace>(&spec.base);
      face != nullptr && face->face_dim >= 2) {
    throw std::invalid_argument(
        "primitive_count: CubeFace bases with face_dim >= 2 are theory-only");
  }
  const RingRadii radii = ring_radii(spec, eps);
  auto cap_resolution = [](double r) { return std::min(r, 1.0 - 1e-9); };

  std::int64_t total = 0;
  auto count_ring = [&](double rho) {
    std::visit(
        [&](const auto& base) {
          using T = std::decay_t<decltype(base)>;
          if constexpr (std::is_same_v<T, Singleton>) {
            total += 1;
          } else if constexpr (std::is_same_v<T, EAlpha>) {
            total += representation_size(base.alpha,
                                         cap_resolution(eps / rho));
          } else if constexpr (std::is_same_v<T, DBeta>) {
            const double res =
                cap_resolution(4.0 * eps / (std::numbers::pi * rho));
            total += 2 * representation_size(base.beta, res);
          } else if constexpr (std::is_same_v<T, UniformCantor>) {
            const double cutoff = 4.0 * eps / (std::numbers::pi * rho);
            total += cantor_ring_count(base, cutoff, rho, eps);
          } else if constexpr (std::is_same_v<T, FullCircle>) {
            total += static_cast<std::int64_t>(
                std::ceil(rho * 2.0 * std::numbers::pi / (2.0 * eps)));
          } else { // CubeFace, face_dim <= 1
            total += base.face_dim == 0
                         ? 1
                         : static_cast<std::int64_t>(
                               std::ceil(rho / (2.0 * eps)));
          }
        },
        spec.base);
  };
  for (double rho : radii.tail) count_ring(rho);
  for (double rho : radii.core) count_ring(rho);
  return total;
}

} // namespace nestkit
