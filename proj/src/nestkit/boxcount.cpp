#include "nestkit/boxcount.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nestkit {

namespace {
constexpr std::int64_t kSampleCap = std::int64_t{1} << 27;
}

std::int64_t grid_count(const Scene& scene, double eps,
                        std::int64_t cell_cap) {
  if (scene.primitives.empty()) {
    throw std::invalid_argument("grid_count: scene is empty");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("grid_count: eps must be positive");
  }
  const double inv_eps = 1.0 / eps;
  // Scenes live inside the unit disk, so cell indices fit in
  // [-span, span]; keys pack (i, j) into one integer.
  const std::int64_t span = static_cast<std::int64_t>(std::ceil(2.0 * inv_eps)) + 4;
  const std::int64_t stride = 2 * span + 1;

  std::vector<std::int64_t> keys;
  auto mark = [&](double x, double y) {
    const std::int64_t i = static_cast<std::int64_t>(std::floor(x * inv_eps));
    const std::int64_t j = static_cast<std::int64_t>(std::floor(y * inv_eps));
    keys.push_back((i + span) * stride + (j + span));
    if (static_cast<std::int64_t>(keys.size()) > kSampleCap) {
      throw std::runtime_error("grid_count: occupied-cell budget exceeded");
    }
  };

  for (const Primitive& prim : scene.primitives) {
    if (prim.kind == Primitive::Kind::Point) {
      const Point2 p = phi1(prim.angle_lo);
      mark(prim.ring_radius * p.x, prim.ring_radius * p.y);
    } else {
      const double arc_length =
          prim.ring_radius * (prim.angle_hi - prim.angle_lo);
      const auto steps = static_cast<std::int64_t>(
          std::ceil(arc_length / (eps / 4.0)));
      for (std::int64_t t = 0; t <= steps; ++t) {
        const double theta =
            prim.angle_lo + (prim.angle_hi - prim.angle_lo) *
                                static_cast<double>(t) /
                                static_cast<double>(steps);
        const Point2 p = phi1(theta);
        mark(prim.ring_radius * p.x, prim.ring_radius * p.y);
      }
    }
  }

  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  const auto occupied = static_cast<std::int64_t>(keys.size());
  if (occupied > cell_cap) {
    throw std::runtime_error("grid_count: occupied-cell budget exceeded");
  }
  return occupied;
}

double sausage_measure_1d(std::span<const double> points,
                          std::span<const Interval> intervals, double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("sausage_measure_1d: eps must be positive");
  }
  std::vector<Interval> fattened;
  fattened.reserve(points.size() + intervals.size());
  for (double x : points) {
    fattened.push_back({x - eps, x + eps});
  }
  for (const Interval& iv : intervals) {
    if (!(iv.lo <= iv.hi)) {
      throw std::invalid_argument("sausage_measure_1d: interval with lo > hi");
    }
    fattened.push_back({iv.lo - eps, iv.hi + eps});
  }
  if (fattened.empty()) return 0.0;

  std::sort(fattened.begin(), fattened.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  double total = 0.0;
  double cur_lo = fattened.front().lo;
  double cur_hi = fattened.front().hi;
  for (const Interval& iv : fattened) {
    if (iv.lo <= cur_hi) {
      cur_hi = std::max(cur_hi, iv.hi);
    } else {
      total += cur_hi - cur_lo;
      cur_lo = iv.lo;
      cur_hi = iv.hi;
    }
  }
  total += cur_hi - cur_lo;
  return total;
}

EstimateReport regression_dimension(const CountSeries& series) {
  const std::size_t n = series.rows.size();
  if (n < 3) {
    throw std::invalid_argument("regression_dimension: need at least 3 rows");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(series.rows[i].eps > 0.0) || series.rows[i].count <= 0) {
      throw std::invalid_argument(
          "regression_dimension: rows need positive eps and count");
    }
    if (i > 0 && !(series.rows[i].eps < series.rows[i - 1].eps)) {
      throw std::invalid_argument(
          "regression_dimension: eps must be strictly decreasing");
    }
  }

  std::vector<double> xs(n), ys(n);
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = -std::log(series.rows[i].eps);
    ys[i] = std::log(static_cast<double>(series.rows[i].count));
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (!(sxx > 0.0)) {
    throw std::invalid_argument(
        "regression_dimension: degenerate eps spread, no slope");
  }

  EstimateReport report;
  report.slope = sxy / sxx;
  report.intercept = mean_y - report.slope * mean_x;
  report.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    report.residuals[i] = ys[i] - (report.intercept + report.slope * xs[i]);
  }
  return report;
}

double relative_error(const EstimateReport& report, double theory) {
  if (!(theory > 0.0)) {
    throw std::invalid_argument("relative_error: theory value must be positive");
  }
  return std::abs(report.slope - theory) / theory;
}

std::vector<double> epsilon_schedule(double eps_hi, double eps_lo,
                                     int samples) {
  if (!(eps_lo > 0.0) || !(eps_lo < eps_hi)) {
    throw std::invalid_argument(
        "epsilon_schedule: need 0 < eps_lo < eps_hi");
  }
  if (samples < 3) {
    throw std::invalid_argument("epsilon_schedule: need samples >= 3");
  }
  std::vector<double> schedule(static_cast<std::size_t>(samples));
  const double log_ratio = std::log(eps_lo / eps_hi);
  for (int i = 0; i < samples; ++i) {
    schedule[static_cast<std::size_t>(i)] =
        eps_hi * std::exp(log_ratio * static_cast<double>(i) /
                          static_cast<double>(samples - 1));
  }
  schedule.front() = eps_hi;
  schedule.back() = eps_lo;
  return schedule;
}

} // namespace nestkit
