#include "nestkit/base_sets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nestkit/gamma.hpp"
#include "nestkit/nests.hpp"

namespace nestkit {

namespace {

void check_cantor_params(int copies, double ratio) {
  if (copies < 2) {
    throw std::invalid_argument("uniform Cantor set requires copies >= 2, got " +
                                std::to_string(copies));
  }
  if (!(ratio > 0.0) || !(ratio < 1.0 / copies)) {
    throw std::invalid_argument(
        "uniform Cantor set requires 0 < ratio < 1/copies, got ratio=" +
        std::to_string(ratio) + " with copies=" + std::to_string(copies));
  }
}

constexpr std::size_t kCantorSegmentCap = std::size_t{1} << 26;

} // namespace

void validate(const BaseSet& base) {
  std::visit(
      [](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, EAlpha>) {
          if (!(b.alpha > 0.0))
            throw std::invalid_argument("EAlpha requires alpha > 0");
        } else if constexpr (std::is_same_v<T, DBeta>) {
          if (!(b.beta > 0.0))
            throw std::invalid_argument("DBeta requires beta > 0");
        } else if constexpr (std::is_same_v<T, UniformCantor>) {
          check_cantor_params(b.copies, b.ratio);
        } else if constexpr (std::is_same_v<T, CubeFace>) {
          if (b.face_dim < 0)
            throw std::invalid_argument("CubeFace requires face_dim >= 0");
        }
      },
      base);
}

double base_dimension(const BaseSet& base) {
  validate(base);
  return std::visit(
      [](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Singleton>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, EAlpha>) {
          return 1.0 / (1.0 + b.alpha);
        } else if constexpr (std::is_same_v<T, DBeta>) {
          return 1.0 / (1.0 + b.beta);
        } else if constexpr (std::is_same_v<T, UniformCantor>) {
          return -std::log(static_cast<double>(b.copies)) / std::log(b.ratio);
        } else if constexpr (std::is_same_v<T, FullCircle>) {
          return 1.0;
        } else {
          return static_cast<double>(b.face_dim);
        }
      },
      base);
}

std::vector<double> e_alpha_points(double alpha, double eps) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("e_alpha_points: alpha must be positive");
  }
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::invalid_argument(
        "e_alpha_points: eps must lie in (0, 1); the representation "
        "degenerates to a single blob at eps >= 1");
  }
  const SplitIndices split = split_indices(alpha, eps);
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(split.tail_count + split.core_count));
  for (std::int64_t k = 1; k <= split.tail_count; ++k) {
    points.push_back(std::pow(static_cast<double>(k), -alpha));
  }
  // Core cover from the top down; the last (largest) radius is capped at 1
  // so the cover never leaves the unit interval when the tail is empty.
  for (std::int64_t k = split.core_count; k >= 1; --k) {
    points.push_back(std::min(2.0 * static_cast<double>(k) * eps, 1.0));
  }
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<double> d_beta_angles(double beta, double eps_rel) {
  const std::vector<double> xs = e_alpha_points(beta, eps_rel);
  std::vector<double> angles;
  angles.reserve(2 * xs.size());
  const double quarter = std::numbers::pi / 4.0;
  for (double x : xs) {
    angles.push_back(quarter * (1.0 - x));
    angles.push_back(quarter * (1.0 + x));
  }
  return angles;
}

std::vector<Interval> cantor_segments(int copies, double ratio,
                                      double min_len) {
  check_cantor_params(copies, ratio);
  if (!(min_len > 0.0)) {
    throw std::invalid_argument("cantor_segments: min_len must be positive");
  }
  const double gap_fraction =
      (1.0 - copies * ratio) / static_cast<double>(copies - 1);

  std::vector<Interval> out;
  // subdivide() replaces [lo, lo+len] by `copies` children; children are
  // refined further only while the gap their own subdivision creates is
  // still larger than min_len.
  auto subdivide = [&](auto&& self, double lo, double len) -> void {
    const double child_len = ratio * len;
    const double stride = (len - child_len) / static_cast<double>(copies - 1);
    for (int i = 0; i < copies; ++i) {
      const double child_lo = lo + stride * static_cast<double>(i);
      if (child_len * gap_fraction > min_len) {
        self(self, child_lo, child_len);
      } else {
        if (out.size() >= kCantorSegmentCap) {
          throw std::runtime_error(
              "cantor_segments: segment budget exceeded; raise min_len");
        }
        out.push_back({child_lo, child_lo + child_len});
      }
    }
  };
  subdivide(subdivide, 0.0, 1.0);
  return out;
}

Point2 phi1(double theta) { return {std::cos(theta), std::sin(theta)}; }

double e_alpha_content(double alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("e_alpha_content: alpha must be positive");
  }
  const double exponent = alpha / (alpha + 1.0);
  return std::pow(2.0 / (alpha * std::sqrt(std::numbers::pi)), exponent) *
         (alpha + 1.0) * lanczos_gamma(alpha / (2.0 * (alpha + 1.0)) + 1.0);
}

ContentBounds cantor_minkowski_contents(int copies, double ratio) {
  check_cantor_params(copies, ratio);
  const double n = static_cast<double>(copies);
  const double d = -std::log(n) / std::log(ratio);
  const double norm = gamma_coeff(1.0 - d);
  const double first_gap = (1.0 - n * ratio) / (n - 1.0);
  ContentBounds bounds;
  bounds.upper = 2.0 * n * std::pow(first_gap / 2.0, d) * (1.0 - ratio) /
                 (1.0 - n * ratio) / norm;
  bounds.lower =
      2.0 / (1.0 - d) * std::pow((1.0 - d) / (2.0 * d), d) / norm;
  return bounds;
}

double cube_sausage_volume(int m, int n, double eps) {
  if (m < 0 || n < 0 || m > n) {
    throw std::invalid_argument("cube_sausage_volume: need 0 <= m <= n");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("cube_sausage_volume: eps must be positive");
  }
  // face_count(m, k) = 2^{m-k} * C(m, k), the number of k-faces of the m-cube
  auto face_count = [](int mm, int kk) -> double {
    double binom = 1.0;
    for (int i = 1; i <= kk; ++i) {
      binom *= static_cast<double>(mm - kk + i) / static_cast<double>(i);
    }
    return std::ldexp(binom, mm - kk);
  };
  double acc = gamma_coeff(static_cast<double>(n - m));
  for (int k = 0; k < m; ++k) {
    acc += gamma_coeff(static_cast<double>(n - k)) *
           std::pow(eps / 2.0, static_cast<double>(m - k)) * face_count(m, k);
  }
  return acc * std::pow(eps, static_cast<double>(n - m));
}

} // namespace nestkit
