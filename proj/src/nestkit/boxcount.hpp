#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nestkit/nests.hpp"

namespace nestkit {

enum class CounterKind { Primitive, Grid };

struct CountRow {
  double eps = 0.0;
  std::int64_t count = 0;
};

// (eps, count) series with eps strictly decreasing.
struct CountSeries {
  std::vector<CountRow> rows;
  CounterKind counter_kind = CounterKind::Primitive;
};

struct EstimateReport {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> residuals; // one per row, in row order
  std::optional<double> relative_error;
  std::optional<double> theory_value;
};

// Number of occupied cells of the eps-mesh anchored at the origin, cells
// half-open [i*eps, (i+1)*eps).  A point marks its containing cell; an arc
// is sampled at arc-length steps of eps/4.  Fails explicitly once the
// occupied-cell budget is exceeded.
std::int64_t grid_count(const Scene& scene, double eps,
                        std::int64_t cell_cap = std::int64_t{1} << 26);

// Exact Lebesgue measure of the union of [x-eps, x+eps] over points and
// [lo-eps, hi+eps] over intervals, by sort-and-merge.
double sausage_measure_1d(std::span<const double> points,
                          std::span<const Interval> intervals, double eps);

// Ordinary least squares of ln(count) against -ln(eps); the slope is the
// dimension estimate.
EstimateReport regression_dimension(const CountSeries& series);

double relative_error(const EstimateReport& report, double theory);

// Geometric schedule from eps_hi down to eps_lo inclusive, strictly
// decreasing, `samples` >= 3 values with exact endpoints.
std::vector<double> epsilon_schedule(double eps_hi, double eps_lo,
                                     int samples);

} // namespace nestkit
