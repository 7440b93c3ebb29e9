#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "nestkit/gamma.hpp"

using namespace nestkit;

TEST_CASE("gamma function matches libm on [1, 2]") {
  // independent reference route: std::tgamma
  for (int i = 0; i <= 200; ++i) {
    const double z = 1.0 + static_cast<double>(i) / 200.0;
    const double mine = lanczos_gamma(z);
    const double ref = std::tgamma(z);
    CHECK(std::abs(mine - ref) / ref < 1e-11);
  }
  CHECK(lanczos_gamma(1.5) ==
        doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-13));
  CHECK(lanczos_gamma(5.0) == doctest::Approx(24.0).epsilon(1e-13));
}

TEST_CASE("ball volume coefficients at integer dimensions") {
  CHECK(std::abs(gamma_coeff(0.0) - 1.0) < 1e-12);
  CHECK(std::abs(gamma_coeff(1.0) - 2.0) < 1e-12);
  CHECK(std::abs(gamma_coeff(2.0) - std::numbers::pi) < 1e-12);
  CHECK(gamma_coeff(3.0) ==
        doctest::Approx(4.0 / 3.0 * std::numbers::pi).epsilon(1e-13));
}

TEST_CASE("gamma_coeff recurrence") {
  // gamma_{x+2} = gamma_x * 2 pi / (x + 2)
  for (double x : {0.0, 0.5, 1.0, 1.5}) {
    const double lhs = gamma_coeff(x + 2.0);
    const double rhs = gamma_coeff(x) * 2.0 * std::numbers::pi / (x + 2.0);
    CHECK(std::abs(lhs - rhs) / rhs < 1e-9);
  }
}

TEST_CASE("gamma_coeff rejects negative arguments") {
  CHECK_THROWS_AS(gamma_coeff(-0.1), std::invalid_argument);
}
