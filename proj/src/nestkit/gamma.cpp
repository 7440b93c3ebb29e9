#include "nestkit/gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nestkit {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

} // namespace

double lanczos_gamma(double z) {
  if (!(z > 0.0)) {
    throw std::invalid_argument("lanczos_gamma: argument must be positive");
  }
  if (z < 0.5) {
    // reflection, keeps the series argument above 1
    const double pi = std::numbers::pi;
    return pi / (std::sin(pi * z) * lanczos_gamma(1.0 - z));
  }
  z -= 1.0;
  double series = kLanczosCoeff[0];
  for (int i = 1; i < 9; ++i) {
    series += kLanczosCoeff[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) *
         std::exp(-t) * series;
}

double gamma_coeff(double x) {
  if (!(x >= 0.0)) {
    throw std::invalid_argument("gamma_coeff: x must be nonnegative");
  }
  return std::pow(std::numbers::pi, x / 2.0) / lanczos_gamma(x / 2.0 + 1.0);
}

} // namespace nestkit
