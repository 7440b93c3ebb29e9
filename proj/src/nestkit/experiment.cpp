#include "nestkit/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nestkit/theory.hpp"

namespace nestkit {

namespace {

std::string num6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return grid;
}

// Worker cap for sweep grids; rows stay ordered by grid index regardless of
// completion order.
template <typename Fn>
void parallel_for(int n, Fn&& body) {
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers =
      static_cast<int>(std::min<unsigned>(hw == 0 ? 1 : hw, 8));
  std::vector<std::future<void>> futures;
  futures.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      for (int i = w; i < n; i += workers) body(i);
    }));
  }
  for (auto& f : futures) f.get();
}

struct GridOutcome {
  std::vector<SweepRow> rows;
  std::string warning;
};

GridOutcome run_grid_point(double target_dim, double alpha, int copies,
                           double eps_hi, double eps_lo, int samples,
                           bool force) {
  GridOutcome outcome;
  FamilyParams params;
  try {
    params = family_params(target_dim, alpha, copies, force);
  } catch (const std::invalid_argument& err) {
    outcome.warning = err.what();
    return outcome;
  }

  const NestSpec bifractal{NestKind::Centre, alpha, DBeta{params.beta}};
  const NestSpec cantor{NestKind::Centre, alpha,
                        UniformCantor{copies, params.ratio}};
  const EstimateRun db = run_estimate(bifractal, eps_hi, eps_lo, samples,
                                      CounterKind::Primitive, target_dim);
  outcome.rows.push_back({"dbeta", target_dim, alpha, params.beta,
                          db.report.slope, *db.report.relative_error});
  const EstimateRun ct = run_estimate(cantor, eps_hi, eps_lo, samples,
                                      CounterKind::Primitive, target_dim);
  outcome.rows.push_back({"cantor", target_dim, alpha, params.ratio,
                          ct.report.slope, *ct.report.relative_error});
  return outcome;
}

} // namespace

EstimateRun run_estimate(const NestSpec& spec, double eps_hi, double eps_lo,
                         int samples, CounterKind counter,
                         std::optional<double> theory_override) {
  validate(spec);
  EstimateRun run;
  run.series.counter_kind = counter;
  for (double eps : epsilon_schedule(eps_hi, eps_lo, samples)) {
    std::int64_t count = 0;
    if (counter == CounterKind::Primitive) {
      count = primitive_count(spec, eps);
    } else {
      count = grid_count(generate_scene(spec, eps), eps);
    }
    run.series.rows.push_back({eps, count});
  }
  run.report = regression_dimension(run.series);
  run.theory = theory_override
                   ? *theory_override
                   : nest_dimension(spec.kind, spec.alpha,
                                    base_dimension(spec.base))
                         .value;
  run.report.theory_value = run.theory;
  run.report.relative_error = relative_error(run.report, run.theory);

  std::string csv = "epsilon,count,neg_ln_eps,ln_count,residual\n";
  for (std::size_t i = 0; i < run.series.rows.size(); ++i) {
    const CountRow& row = run.series.rows[i];
    csv += num6(row.eps);
    csv += ',';
    csv += std::to_string(row.count);
    csv += ',';
    csv += num6(-std::log(row.eps));
    csv += ',';
    csv += num6(std::log(static_cast<double>(row.count)));
    csv += ',';
    csv += num6(run.report.residuals[i]);
    csv += '\n';
  }
  run.csv = std::move(csv);
  run.summary = "slope=" + num6(run.report.slope) +
                " theory=" + num6(run.theory) +
                " rel_err=" + num6(*run.report.relative_error);
  return run;
}

FamilyParams family_params(double target_dim, double alpha, int copies,
                           bool force) {
  if (!(target_dim > 0.0) || !(target_dim <= 1.0)) {
    throw std::invalid_argument("family_params: need target_dim in (0, 1]");
  }
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("family_params: alpha must be positive");
  }
  if (copies < 2) {
    throw std::invalid_argument("family_params: need copies >= 2");
  }
  const double lo = 1.0 / target_dim - 1.0;
  const double hi = 1.0 / target_dim;
  double delta = 0.0;
  if (alpha > lo && alpha < hi) {
    delta = target_dim * alpha + target_dim - 1.0;
  } else if (force && alpha >= hi) {
    // saturated regime: the nest dimension equals the base dimension
    delta = target_dim;
  } else {
    std::ostringstream msg;
    msg << "alpha=" << alpha << " is outside the open interval (" << lo << ", "
        << hi << ") admissible for target dimension " << target_dim;
    if (alpha >= hi) {
      msg << " (pass force to run in the saturated regime)";
    }
    throw std::invalid_argument(msg.str());
  }
  FamilyParams params;
  params.delta = delta;
  params.beta = 1.0 / delta - 1.0;
  params.ratio = std::pow(static_cast<double>(copies), -1.0 / delta);
  return params;
}

SweepResult sweep_fixed_dimension(double target_dim, double alpha_lo,
                                  double alpha_hi, int grid_points, int copies,
                                  double eps_hi, double eps_lo, int samples,
                                  bool force) {
  if (grid_points < 2 || !(alpha_lo < alpha_hi)) {
    throw std::invalid_argument(
        "sweep_fixed_dimension: need grid_points >= 2 and alpha_lo < alpha_hi");
  }
  const std::vector<double> alphas = linspace(alpha_lo, alpha_hi, grid_points);
  std::vector<GridOutcome> outcomes(alphas.size());
  parallel_for(grid_points, [&](int i) {
    outcomes[static_cast<std::size_t>(i)] =
        run_grid_point(target_dim, alphas[static_cast<std::size_t>(i)], copies,
                       eps_hi, eps_lo, samples, force);
  });
  SweepResult result;
  for (auto& outcome : outcomes) {
    for (auto& row : outcome.rows) result.rows.push_back(std::move(row));
    if (!outcome.warning.empty())
      result.warnings.push_back(std::move(outcome.warning));
  }
  return result;
}

SweepResult sweep_varying_dimension(double dim_lo, double dim_hi,
                                    int grid_points, int copies, double eps_hi,
                                    double eps_lo, int samples) {
  if (grid_points < 2 || !(dim_lo < dim_hi)) {
    throw std::invalid_argument(
        "sweep_varying_dimension: need grid_points >= 2 and dim_lo < dim_hi");
  }
  const std::vector<double> dims = linspace(dim_lo, dim_hi, grid_points);
  std::vector<GridOutcome> outcomes(dims.size());
  parallel_for(grid_points, [&](int i) {
    const double d = dims[static_cast<std::size_t>(i)];
    outcomes[static_cast<std::size_t>(i)] = run_grid_point(
        d, centered_alpha(d), copies, eps_hi, eps_lo, samples, false);
  });
  SweepResult result;
  for (auto& outcome : outcomes) {
    for (auto& row : outcome.rows) result.rows.push_back(std::move(row));
    if (!outcome.warning.empty())
      result.warnings.push_back(std::move(outcome.warning));
  }
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  std::string csv = "family,d_target,alpha,beta_or_r,slope,rel_err\n";
  for (const SweepRow& row : result.rows) {
    csv += row.family;
    csv += ',';
    csv += num6(row.target_dim);
    csv += ',';
    csv += num6(row.alpha);
    csv += ',';
    csv += num6(row.beta_or_r);
    csv += ',';
    csv += num6(row.slope);
    csv += ',';
    csv += num6(row.rel_err);
    csv += '\n';
  }
  return csv;
}

} // namespace nestkit
