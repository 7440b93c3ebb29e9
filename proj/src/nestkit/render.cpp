#include "nestkit/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace nestkit {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0,
                double d = 0.0, double e = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c, d, e);
  return buf;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

double default_render_eps() { return kWorldSpan / 300.0; }

std::string render_scene(const Scene& scene, int size_px, ImageFormat format) {
  if (size_px <= 0) {
    throw std::invalid_argument("render_scene: canvas size must be positive");
  }
  if (!(scene.eps > 0.0)) {
    throw std::invalid_argument("render_scene: scene has no eps");
  }
  const double scale = static_cast<double>(size_px) / kWorldSpan;
  const double half = static_cast<double>(size_px) / 2.0;
  const double stroke = 2.0 * scene.eps * scale;
  const double dot = scene.eps * scale;

  std::string out;
  out.reserve(256 + scene.primitives.size() * 96);

  if (format == ImageFormat::Svg) {
    // y flips: world y up, svg y down
    auto px = [&](double wx) { return half + wx * scale; };
    auto py = [&](double wy) { return half - wy * scale; };

    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
        "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
        static_cast<double>(size_px), static_cast<double>(size_px),
        static_cast<double>(size_px), static_cast<double>(size_px));
    out += "<!-- nestkit-svg 1 -->\n";
    out += fmt(
        "<g fill=\"none\" stroke=\"#000\" stroke-width=\"%.4f\" "
        "stroke-linecap=\"round\">\n",
        stroke);
    for (const Primitive& prim : scene.primitives) {
      const double rho = prim.ring_radius;
      if (prim.kind == Primitive::Kind::Point) {
        const Point2 p = phi1(prim.angle_lo);
        out += fmt(
            "<circle cx=\"%.4f\" cy=\"%.4f\" r=\"%.4f\" fill=\"#000\" "
            "stroke=\"none\"/>\n",
            px(rho * p.x), py(rho * p.y), dot);
      } else if (prim.angle_hi - prim.angle_lo >= kTwoPi - 1e-12) {
        out += fmt("<circle cx=\"%.4f\" cy=\"%.4f\" r=\"%.4f\"/>\n", half,
                   half, rho * scale);
      } else {
        const Point2 a = phi1(prim.angle_lo);
        const Point2 b = phi1(prim.angle_hi);
        const int large = (prim.angle_hi - prim.angle_lo) > std::numbers::pi;
        out += fmt("<path d=\"M %.4f %.4f A %.4f %.4f 0 ", px(rho * a.x),
                   py(rho * a.y), rho * scale, rho * scale);
        // world counterclockwise is screen clockwise after the y flip
        out += std::to_string(large) + " 0 ";
        out += fmt("%.4f %.4f\"/>\n", px(rho * b.x), py(rho * b.y));
      }
    }
    out += "</g>\n</svg>\n";
    return out;
  }

  // EPS: native y-up coordinates, arcs in degrees
  const double rad2deg = 180.0 / std::numbers::pi;
  out += "%!PS-Adobe-3.0 EPSF-3.0\n";
  out += fmt("%%%%BoundingBox: 0 0 %.0f %.0f\n", static_cast<double>(size_px),
             static_cast<double>(size_px));
  out += "%% nestkit-eps 1\n";
  out += "1 setlinecap\n0 setgray\n";
  out += fmt("%.4f setlinewidth\n", stroke);
  for (const Primitive& prim : scene.primitives) {
    const double rho_px = prim.ring_radius * scale;
    if (prim.kind == Primitive::Kind::Point) {
      const Point2 p = phi1(prim.angle_lo);
      out += fmt("newpath %.4f %.4f %.4f 0 360 arc fill\n",
                 half + prim.ring_radius * p.x * scale,
                 half + prim.ring_radius * p.y * scale, dot);
    } else {
      out += fmt("newpath %.4f %.4f %.4f %.4f %.4f arc stroke\n", half, half,
                 rho_px, prim.angle_lo * rad2deg, prim.angle_hi * rad2deg);
    }
  }
  out += "showpage\n%%EOF\n";
  return out;
}

} // namespace nestkit
