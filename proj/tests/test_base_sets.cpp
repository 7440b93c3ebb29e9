#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "nestkit/base_sets.hpp"
#include "nestkit/boxcount.hpp"
#include "nestkit/gamma.hpp"
#include "nestkit/nests.hpp"
#include "nestkit/theory.hpp"

using namespace nestkit;

TEST_CASE("base dimensions") {
  CHECK(base_dimension(EAlpha{1.0}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(base_dimension(Singleton{}) == 0.0);
  CHECK(base_dimension(UniformCantor{2, 1.0 / 3.0}) ==
        doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-15));
  CHECK(base_dimension(DBeta{3.0}) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(base_dimension(FullCircle{}) == 1.0);
  CHECK(base_dimension(CubeFace{2}) == 2.0);
}

TEST_CASE("base validation") {
  CHECK_THROWS_AS(validate(BaseSet{EAlpha{0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(BaseSet{DBeta{-1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(BaseSet{UniformCantor{1, 0.2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(BaseSet{UniformCantor{3, 0.4}}),
                  std::invalid_argument);
}

TEST_CASE("e_alpha_points at alpha=1, eps=1/40") {
  const auto pts = e_alpha_points(1.0, 1.0 / 40.0);
  // tail 1, 1/2, 1/3, 1/4 then the 2k*eps cover from the top down
  REQUIRE(pts.size() == 8);
  const double expected[8] = {1.0,  1.0 / 2.0, 1.0 / 3.0, 1.0 / 4.0,
                              0.20, 0.15,      0.10,      0.05};
  for (int i = 0; i < 8; ++i) {
    CHECK(pts[static_cast<std::size_t>(i)] ==
          doctest::Approx(expected[i]).epsilon(1e-14));
  }
}

TEST_CASE("e_alpha_points with empty tail") {
  // eps just below 1: no gap of {k^-alpha} exceeds 2 eps
  const double eps = 0.96;
  const auto split = split_indices(1.0, eps);
  CHECK(split.tail_count == 0);
  const auto pts = e_alpha_points(1.0, eps);
  CHECK(pts.size() == static_cast<std::size_t>(std::ceil(1.0 / (2.0 * eps))));
  for (double p : pts) {
    CHECK(p > 0.0);
    CHECK(p <= 1.0);
  }
}

TEST_CASE("e_alpha_points rejects eps >= 1") {
  CHECK_THROWS_AS(e_alpha_points(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(e_alpha_points(1.0, 1.5), std::invalid_argument);
}

TEST_CASE("e_alpha_points count follows the power law") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    double lo = 1e300, hi = 0.0;
    for (int k = 5; k <= 25; ++k) {
      const double eps = std::pow(2.0, -k);
      const double count =
          static_cast<double>(e_alpha_points(alpha, eps).size());
      const double ratio = count * std::pow(eps, 1.0 / (1.0 + alpha));
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    CHECK(hi / lo < 4.0); // bounded ratio band across the eps range
  }
}

TEST_CASE("points are sorted descending and inside (0, 1]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> alpha_dist(0.2, 3.0);
  std::uniform_real_distribution<double> log_eps(-14.0, -2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pts =
        e_alpha_points(alpha_dist(rng), std::exp2(log_eps(rng)));
    REQUIRE(!pts.empty());
    CHECK(pts.front() <= 1.0);
    CHECK(pts.back() > 0.0);
    CHECK(std::is_sorted(pts.rbegin(), pts.rend()));
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
  }
}

TEST_CASE("d_beta_angles doubles the point count into [0, pi/2]") {
  const auto angles = d_beta_angles(1.0, 1.0 / 40.0);
  CHECK(angles.size() == 16);
  for (double a : angles) {
    CHECK(a >= 0.0);
    CHECK(a <= std::numbers::pi / 2.0 + 1e-15);
  }
  // x = 1 contributes the two branch endpoints
  CHECK(angles[0] == doctest::Approx(0.0));
  CHECK(angles[1] == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-15));
}

TEST_CASE("cantor_segments first iterations") {
  SUBCASE("N=3 r=1/4 keeps the first level when gaps resolve") {
    for (double min_len : {0.125, 0.2, 5.0}) {
      const auto segs = cantor_segments(3, 0.25, min_len);
      REQUIRE(segs.size() == 3);
      CHECK(segs[0].lo == doctest::Approx(0.0));
      CHECK(segs[0].hi == doctest::Approx(0.25));
      CHECK(segs[1].lo == doctest::Approx(0.375));
      CHECK(segs[1].hi == doctest::Approx(0.625));
      CHECK(segs[2].lo == doctest::Approx(0.75));
      CHECK(segs[2].hi == doctest::Approx(1.0));
    }
  }
  SUBCASE("N=2 r=1/3 single subdivision") {
    const auto segs = cantor_segments(2, 1.0 / 3.0, 0.5);
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].lo == doctest::Approx(0.0));
    CHECK(segs[0].hi == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(segs[1].lo == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(segs[1].hi == doctest::Approx(1.0));
  }
}

TEST_CASE("cantor_segments total length is (N r)^depth") {
  const int copies = 3;
  const double ratio = 0.25;
  const double gap0 = (1.0 - copies * ratio) / (copies - 1.0);
  for (int depth = 1; depth <= 5; ++depth) {
    // min_len between the gaps created at depth and depth+1
    const double min_len = gap0 * std::pow(ratio, depth) * 1.5;
    const auto segs = cantor_segments(copies, ratio, min_len);
    CHECK(segs.size() == static_cast<std::size_t>(std::pow(copies, depth)));
    double total = 0.0;
    for (const Interval& iv : segs) total += iv.length();
    CHECK(total ==
          doctest::Approx(std::pow(copies * ratio, depth)).epsilon(1e-12));
  }
}

TEST_CASE("cantor_segments output is ordered, disjoint, laminar") {
  const int copies = 2;
  const double ratio = 1.0 / 3.0;
  double min_len = 0.2;
  auto coarse = cantor_segments(copies, ratio, min_len);
  for (int round = 0; round < 6; ++round) {
    min_len /= 2.0;
    const auto fine = cantor_segments(copies, ratio, min_len);
    for (std::size_t i = 0; i + 1 < fine.size(); ++i) {
      CHECK(fine[i].hi < fine[i + 1].lo); // pairwise disjoint, ascending
    }
    // halving min_len only splits intervals: each fine interval sits inside
    // exactly one coarse interval
    for (const Interval& f : fine) {
      int hosts = 0;
      for (const Interval& c : coarse) {
        if (f.lo >= c.lo - 1e-12 && f.hi <= c.hi + 1e-12) ++hosts;
      }
      CHECK(hosts == 1);
    }
    coarse = fine;
  }
}

TEST_CASE("cantor_segments rejects invalid parameters") {
  CHECK_THROWS_AS(cantor_segments(1, 0.2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(cantor_segments(3, 0.34, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(cantor_segments(2, 0.3, 0.0), std::invalid_argument);
}

TEST_CASE("phi1 basics") {
  CHECK(phi1(0.0).x == doctest::Approx(1.0));
  CHECK(phi1(0.0).y == doctest::Approx(0.0));
  CHECK(phi1(std::numbers::pi / 2.0).x == doctest::Approx(0.0));
  CHECK(phi1(std::numbers::pi / 2.0).y == doctest::Approx(1.0));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = angle(rng);
    const double b = angle(rng);
    const Point2 pa = phi1(a);
    const Point2 pb = phi1(b);
    CHECK(std::abs(pa.x * pa.x + pa.y * pa.y - 1.0) < 1e-12);
    const double chord = std::hypot(pa.x - pb.x, pa.y - pb.y);
    CHECK(chord <= std::abs(a - b) + 1e-12); // Lipschitz constant 1
  }
}

TEST_CASE("e_alpha_content closed form") {
  // direct substitution at alpha = 1, composed through libm
  const double expected = std::pow(2.0 / std::sqrt(std::numbers::pi), 0.5) *
                          2.0 * std::tgamma(1.25);
  CHECK(e_alpha_content(1.0) == doctest::Approx(expected).epsilon(1e-12));
  // smooth in alpha
  CHECK(std::abs(e_alpha_content(1.0) - e_alpha_content(1.0 + 1e-9)) < 1e-6);
}

TEST_CASE("e_alpha_content agrees with the sausage oracle") {
  const double eps = std::pow(2.0, -20);
  const auto pts = e_alpha_points(1.0, eps);
  const double volume = sausage_measure_1d(pts, {}, eps);
  const double ratio = normalized_content_ratio(volume, 1, 0.5, eps);
  CHECK(std::abs(ratio - e_alpha_content(1.0)) / e_alpha_content(1.0) < 0.05);
}

TEST_CASE("e_alpha_content oracle on the enumerated true set") {
  // enumerate 1/k up to the merge region plus the residual accumulation
  const double eps = std::pow(2.0, -18);
  const int cutoff = static_cast<int>(std::ceil(1.0 / eps));
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(cutoff));
  for (int k = 1; k <= cutoff; ++k) pts.push_back(1.0 / k);
  const Interval residual{0.0, 1.0 / (cutoff + 1.0)};
  const double volume = sausage_measure_1d(pts, {&residual, 1}, eps);
  const double ratio = normalized_content_ratio(volume, 1, 0.5, eps);
  CHECK(std::abs(ratio - e_alpha_content(1.0)) / e_alpha_content(1.0) < 0.05);
}

TEST_CASE("cantor contents at (2, 1/3)") {
  const ContentBounds bounds = cantor_minkowski_contents(2, 1.0 / 3.0);
  // the general formulas reduce, at N=2 r=1/3, to
  //   upper = 4 * 2^-d / gamma_{1-d}
  //   lower = 2 log_{3/2}(3) (log_4(3/2))^d / gamma_{1-d}
  const double d = std::log(2.0) / std::log(3.0);
  const double norm = gamma_coeff(1.0 - d);
  const double upper_reduced = 4.0 * std::pow(2.0, -d) / norm;
  const double lower_reduced = 2.0 * (std::log(3.0) / std::log(1.5)) *
                               std::pow(std::log(1.5) / std::log(4.0), d) /
                               norm;
  CHECK(bounds.upper == doctest::Approx(upper_reduced).epsilon(1e-12));
  CHECK(bounds.lower == doctest::Approx(lower_reduced).epsilon(1e-12));
  CHECK(bounds.upper == doctest::Approx(1.9289439).epsilon(1e-6));
  CHECK(bounds.lower == doctest::Approx(1.8631796).epsilon(1e-6));
  CHECK(bounds.upper >= bounds.lower);
}

TEST_CASE("cantor contents upper >= lower over a parameter grid") {
  for (int copies : {2, 3, 4, 7}) {
    for (double t : {0.05, 0.3, 0.6, 0.9}) {
      const double ratio = t / copies; // spans (0, 1/N)
      const ContentBounds bounds = cantor_minkowski_contents(copies, ratio);
      CHECK(bounds.upper > 0.0);
      CHECK(std::isfinite(bounds.upper));
      CHECK(bounds.upper >= bounds.lower);
    }
  }
}

TEST_CASE("cantor content band contains the sausage ratio of C_2^{1/3}") {
  const ContentBounds bounds = cantor_minkowski_contents(2, 1.0 / 3.0);
  const double d = std::log(2.0) / std::log(3.0);
  // level-8 construction; eps matched to levels 5..7
  const double gap0 = (1.0 - 2.0 / 3.0);
  const auto segs = cantor_segments(2, 1.0 / 3.0, gap0 * std::pow(3.0, -8.0));
  REQUIRE(segs.size() == 256);
  for (int k = 5; k <= 7; ++k) {
    for (double x : {0.4, 0.8}) {
      const double eps = x * std::pow(3.0, -k) / 2.0;
      const double volume = sausage_measure_1d({}, segs, eps);
      const double ratio = normalized_content_ratio(volume, 1, d, eps);
      CHECK(ratio >= bounds.lower * 0.8);
      CHECK(ratio <= bounds.upper * 1.2);
    }
  }
}

TEST_CASE("cube sausage volume") {
  SUBCASE("unit square in the plane") {
    for (double eps : {0.1, 0.01}) {
      const double expected =
          1.0 + 4.0 * eps + std::numbers::pi * eps * eps;
      CHECK(cube_sausage_volume(2, 2, eps) ==
            doctest::Approx(expected).epsilon(1e-14));
    }
  }
  SUBCASE("point sausage is a disk") {
    const double eps = 0.3;
    CHECK(cube_sausage_volume(0, 2, eps) ==
          doctest::Approx(std::numbers::pi * eps * eps).epsilon(1e-14));
  }
  SUBCASE("segment sausage matches a pixel-grid area estimate") {
    const double eps = 0.05;
    const double closed_form = cube_sausage_volume(1, 2, eps);
    const double pitch = eps / 200.0;
    long long inside = 0;
    const long long nx = static_cast<long long>((1.0 + 2.0 * eps) / pitch) + 2;
    const long long ny = static_cast<long long>(2.0 * eps / pitch) + 2;
    for (long long i = 0; i < nx; ++i) {
      const double x = -eps + (static_cast<double>(i) + 0.5) * pitch;
      for (long long j = 0; j < ny; ++j) {
        const double y = -eps + (static_cast<double>(j) + 0.5) * pitch;
        const double dx = x < 0.0 ? -x : (x > 1.0 ? x - 1.0 : 0.0);
        if (dx * dx + y * y <= eps * eps) ++inside;
      }
    }
    const double estimate = static_cast<double>(inside) * pitch * pitch;
    CHECK(std::abs(estimate - closed_form) / closed_form < 0.01);
  }
  SUBCASE("rejects m > n") {
    CHECK_THROWS_AS(cube_sausage_volume(3, 2, 0.1), std::invalid_argument);
  }
}
