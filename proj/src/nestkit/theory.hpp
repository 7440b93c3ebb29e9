#pragma once

#include "nestkit/nests.hpp"

namespace nestkit {

enum class Regime { TailDominant, CoreDominant, Critical, Outer };

// Closed-form box dimension of a nest over a base of dimension delta.
// `nondegenerate` is false exactly at the critical locus alpha*delta = 1,
// where the sausage volume carries a logarithmic correction and no
// Minkowski content exists.
struct DimensionResult {
  double value = 0.0;
  bool nondegenerate = true;
  Regime regime = Regime::CoreDominant;
};

DimensionResult nest_dimension(NestKind kind, double alpha, double delta);

// (beta + 2) / ((beta + 1)(alpha + 1)); equals the centre nest value over a
// base of dimension 1/(1+beta) whenever alpha*delta < 1.
double bifractal_dimension(double alpha, double beta);

// Centre: (1 - log_r N)/(1 + alpha); outer: 1/(1 + alpha) - log_r N.
double cantor_nest_dimension(NestKind kind, double alpha, int copies,
                             double ratio);

// Full-sphere nests in R^n: centre max{n-1, n/(alpha+1)},
// outer n - alpha/(alpha+1).
double hypersphere_nest_dimension(int n, double alpha, NestKind kind);

// Parameters making a centre nest hit target dimension d:
//   delta = d*alpha + d - 1,  beta = 1/delta - 1,  ratio = copies^{-1/delta},
// admissible only for alpha strictly inside (1/d - 1, 1/d).
struct SynthesisedParams {
  double target_dim = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
  double beta = 0.0;
  double ratio = 0.0;
  int copies = 0;
};

SynthesisedParams solve_parameters(double target_dim, double alpha,
                                   int copies);

// Midpoint of the admissible alpha interval, 1/d - 1/2.
double centered_alpha(double target_dim);

// sausage_volume / (gamma_{n-delta} * eps^{n-delta}).
double normalized_content_ratio(double sausage_volume, int n, double delta,
                                double eps);

} // namespace nestkit
