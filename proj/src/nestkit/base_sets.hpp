#pragma once

#include <variant>
#include <vector>

namespace nestkit {

// Closed interval on the real line, lo <= hi.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

// Base subsets of the unit interval / unit circle with known box dimension.
struct Singleton {};
struct EAlpha {
  double alpha; // point set {k^-alpha}, dimension 1/(1+alpha)
};
struct DBeta {
  double beta; // two mirrored E_beta copies on the circle, dimension 1/(1+beta)
};
struct UniformCantor {
  int copies;   // N >= 2 sub-intervals kept per level
  double ratio; // relative length r in (0, 1/N)
};
struct FullCircle {};
struct CubeFace {
  int face_dim; // m-dimensional unit cube face; theory-only for m >= 2
};

using BaseSet =
    std::variant<Singleton, EAlpha, DBeta, UniformCantor, FullCircle, CubeFace>;

// Throws std::invalid_argument when parameters are out of range.
void validate(const BaseSet& base);

// Box dimension delta of the base set.
double base_dimension(const BaseSet& base);

// Finite resolution-eps representation of {k^-alpha}: isolated tail points
// k^-alpha plus a 2*eps-spaced cover of the accumulation core, sorted
// descending, all in (0, 1].  Requires 0 < eps < 1.
std::vector<double> e_alpha_points(double alpha, double eps);

// Angles (pi/4)(1 -+ x) for x in e_alpha_points(beta, eps_rel); two angles
// per point, all in [0, pi/2].
std::vector<double> d_beta_angles(double beta, double eps_rel);

// Recursive uniform Cantor construction on [0,1].  The root interval is
// always subdivided once; a sub-interval is refined further only while the
// gap its subdivision would create exceeds min_len.  Ascending, disjoint.
std::vector<Interval> cantor_segments(int copies, double ratio, double min_len);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Arc-length parameterisation of the unit circle; Lipschitz with constant 1.
Point2 phi1(double theta);

// Closed-form normalised Minkowski content of {k^-alpha}.
double e_alpha_content(double alpha);

struct ContentBounds {
  double upper = 0.0;
  double lower = 0.0;
};

// Closed-form upper/lower normalised Minkowski contents of the uniform
// Cantor set.  The free length scale in the upper formula is taken to be
// the first-level gap (1 - N r)/(N - 1).
ContentBounds cantor_minkowski_contents(int copies, double ratio);

// Lebesgue measure of the eps-sausage of the unit m-cube face in R^n,
// evaluated from the face-count expansion.  Requires 0 <= m <= n.
double cube_sausage_volume(int m, int n, double eps);

} // namespace nestkit
