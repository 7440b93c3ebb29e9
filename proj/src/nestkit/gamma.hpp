#pragma once

namespace nestkit {

// Gamma function for positive arguments, Lanczos approximation (g = 7).
// Accurate to roughly 1e-14 relative on [1, 2], which is where every
// ball-volume coefficient evaluation lands after argument reduction.
double lanczos_gamma(double z);

// Volume coefficient of the x-dimensional unit ball,
// gamma_x = pi^{x/2} / Gamma(x/2 + 1).  Rejects x < 0.
double gamma_coeff(double x);

} // namespace nestkit
