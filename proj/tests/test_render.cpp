#include <string>

#include <doctest.h>

#include "nestkit/nests.hpp"
#include "nestkit/render.hpp"

using namespace nestkit;

namespace {

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
  std::size_t hits = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++hits;
  }
  return hits;
}

} // namespace

TEST_CASE("svg output carries one element per primitive") {
  const NestSpec spec{NestKind::Centre, 1.0, DBeta{1.0}};
  const Scene scene = generate_scene(spec, default_render_eps());
  const std::string svg = render_scene(scene, 600, ImageFormat::Svg);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(svg, "<circle") == scene.primitives.size());
}

TEST_CASE("svg arcs for cantor bases") {
  const NestSpec spec{NestKind::Centre, 1.0, UniformCantor{3, 0.25}};
  const Scene scene = generate_scene(spec, default_render_eps());
  const std::string svg = render_scene(scene, 600, ImageFormat::Svg);
  CHECK(count_occurrences(svg, "<path") == scene.primitives.size());
}

TEST_CASE("render output bytes are deterministic") {
  const NestSpec spec{NestKind::Outer, 0.7, UniformCantor{2, 1.0 / 3.0}};
  const Scene scene = generate_scene(spec, 0.01);
  CHECK(render_scene(scene, 480, ImageFormat::Svg) ==
        render_scene(scene, 480, ImageFormat::Svg));
  CHECK(render_scene(scene, 480, ImageFormat::Eps) ==
        render_scene(scene, 480, ImageFormat::Eps));
}

TEST_CASE("eps output is well formed") {
  const NestSpec spec{NestKind::Centre, 1.0, Singleton{}};
  const Scene scene = generate_scene(spec, default_render_eps());
  const std::string eps = render_scene(scene, 600, ImageFormat::Eps);
  CHECK(eps.rfind("%!PS-Adobe-3.0 EPSF-3.0", 0) == 0);
  CHECK(eps.find("%%BoundingBox: 0 0 600 600") != std::string::npos);
  CHECK(eps.find("setlinewidth") != std::string::npos);
  CHECK(count_occurrences(eps, "arc fill") == scene.primitives.size());
}

TEST_CASE("a coarse nest still renders at least one primitive") {
  const NestSpec spec{NestKind::Centre, 0.5, Singleton{}};
  const Scene scene = generate_scene(spec, 0.24);
  const std::string svg = render_scene(scene, 300, ImageFormat::Svg);
  CHECK(count_occurrences(svg, "<circle") >= 1);
}

TEST_CASE("full circles render as circle elements") {
  const NestSpec spec{NestKind::Centre, 1.0, FullCircle{}};
  const Scene scene = generate_scene(spec, 0.02);
  const std::string svg = render_scene(scene, 600, ImageFormat::Svg);
  CHECK(count_occurrences(svg, "<circle") == scene.primitives.size());
  CHECK(count_occurrences(svg, "<path") == 0);
}
