#include "nestkit/theory.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nestkit/gamma.hpp"

namespace nestkit {

namespace {
constexpr double kCriticalTolerance = 1e-12;
}

DimensionResult nest_dimension(NestKind kind, double alpha, double delta) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("nest_dimension: alpha must be positive");
  }
  if (!(delta >= 0.0) || !(delta <= 1.0)) {
    throw std::invalid_argument(
        "nest_dimension: base dimension delta must lie in [0, 1]");
  }
  if (kind == NestKind::Outer) {
    return {delta + 1.0 / (alpha + 1.0), true, Regime::Outer};
  }
  const double product = alpha * delta;
  if (std::abs(product - 1.0) <= kCriticalTolerance) {
    return {delta, false, Regime::Critical};
  }
  if (product < 1.0) {
    return {(delta + 1.0) / (alpha + 1.0), true, Regime::CoreDominant};
  }
  return {delta, true, Regime::TailDominant};
}

double bifractal_dimension(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::invalid_argument(
        "bifractal_dimension: alpha and beta must be positive");
  }
  return (beta + 2.0) / ((beta + 1.0) * (alpha + 1.0));
}

double cantor_nest_dimension(NestKind kind, double alpha, int copies,
                             double ratio) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("cantor_nest_dimension: alpha must be positive");
  }
  validate(BaseSet{UniformCantor{copies, ratio}});
  const double log_base =
      std::log(static_cast<double>(copies)) / std::log(ratio); // log_r N < 0
  if (kind == NestKind::Centre) {
    return (1.0 - log_base) / (1.0 + alpha);
  }
  return 1.0 / (1.0 + alpha) - log_base;
}

double hypersphere_nest_dimension(int n, double alpha, NestKind kind) {
  if (n < 2) {
    throw std::invalid_argument("hypersphere_nest_dimension: need n >= 2");
  }
  if (!(alpha > 0.0)) {
    throw std::invalid_argument(
        "hypersphere_nest_dimension: alpha must be positive");
  }
  const double nd = static_cast<double>(n);
  if (kind == NestKind::Centre) {
    return std::max(nd - 1.0, nd / (alpha + 1.0));
  }
  return nd - alpha / (alpha + 1.0);
}

SynthesisedParams solve_parameters(double target_dim, double alpha,
                                   int copies) {
  if (!(target_dim > 0.0) || !(target_dim <= 1.0)) {
    throw std::invalid_argument("solve_parameters: need target_dim in (0, 1]");
  }
  if (copies < 2) {
    throw std::invalid_argument("solve_parameters: need copies >= 2");
  }
  const double lo = 1.0 / target_dim - 1.0;
  const double hi = 1.0 / target_dim;
  if (!(alpha > lo) || !(alpha < hi)) {
    std::ostringstream msg;
    msg << "solve_parameters: alpha=" << alpha
        << " must lie strictly inside the open interval (" << lo << ", " << hi
        << ") for target dimension " << target_dim;
    throw std::invalid_argument(msg.str());
  }
  SynthesisedParams params;
  params.target_dim = target_dim;
  params.alpha = alpha;
  params.delta = target_dim * alpha + target_dim - 1.0;
  params.beta = 1.0 / params.delta - 1.0;
  params.ratio = std::pow(static_cast<double>(copies), -1.0 / params.delta);
  params.copies = copies;
  return params;
}

double centered_alpha(double target_dim) {
  if (!(target_dim > 0.0) || !(target_dim <= 1.0)) {
    throw std::invalid_argument("centered_alpha: need target_dim in (0, 1]");
  }
  return 1.0 / target_dim - 0.5;
}

double normalized_content_ratio(double sausage_volume, int n, double delta,
                                double eps) {
  if (!(sausage_volume > 0.0)) {
    throw std::invalid_argument(
        "normalized_content_ratio: sausage volume must be positive");
  }
  if (n < 1 || !(delta >= 0.0) || !(delta <= static_cast<double>(n))) {
    throw std::invalid_argument(
        "normalized_content_ratio: need 0 <= delta <= n");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("normalized_content_ratio: eps must be positive");
  }
  const double codim = static_cast<double>(n) - delta;
  return sausage_volume / (gamma_coeff(codim) * std::pow(eps, codim));
}

} // namespace nestkit
