#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nestkit/boxcount.hpp"
#include "nestkit/nests.hpp"

namespace nestkit {

struct EstimateRun {
  CountSeries series;
  EstimateReport report;
  double theory = 0.0;
  std::string csv;     // epsilon,count,neg_ln_eps,ln_count,residual
  std::string summary; // "slope=... theory=... rel_err=..."
};

// Counts across the geometric schedule, fits the slope and formats the CSV.
// Theory defaults to the closed-form nest dimension of the spec.
EstimateRun run_estimate(const NestSpec& spec, double eps_hi, double eps_lo,
                         int samples, CounterKind counter,
                         std::optional<double> theory_override = {});

// Base-set parameters hitting target dimension d at the given alpha.
// Inside the admissible interval this is the synthesis map delta = d*alpha
// + d - 1; with `force`, alpha at or beyond 1/d falls back to the saturated
// regime delta = d (the nest dimension equals the base dimension there).
struct FamilyParams {
  double delta = 0.0;
  double beta = 0.0;  // bi-fractal base exponent
  double ratio = 0.0; // Cantor base ratio
};

FamilyParams family_params(double target_dim, double alpha, int copies,
                           bool force);

struct SweepRow {
  std::string family; // "dbeta" or "cantor"
  double target_dim = 0.0;
  double alpha = 0.0;
  double beta_or_r = 0.0;
  double slope = 0.0;
  double rel_err = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<std::string> warnings; // skipped grid points
};

// Fixed target dimension, alpha grid; both families per grid point.
SweepResult sweep_fixed_dimension(double target_dim, double alpha_lo,
                                  double alpha_hi, int grid_points, int copies,
                                  double eps_hi, double eps_lo, int samples,
                                  bool force);

// Dimension grid with alpha = 1/d - 1/2; both families per grid point.
SweepResult sweep_varying_dimension(double dim_lo, double dim_hi,
                                    int grid_points, int copies, double eps_hi,
                                    double eps_lo, int samples);

// family,d_target,alpha,beta_or_r,slope,rel_err
std::string sweep_csv(const SweepResult& result);

} // namespace nestkit
