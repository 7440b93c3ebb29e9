#pragma once

#include <string>

#include "nestkit/nests.hpp"

namespace nestkit {

enum class ImageFormat { Svg, Eps };

// Figures place the unit disk on a square canvas with a small margin; the
// stroke width is 2*eps in world units so strokes approximate the
// eps-sausage, points rendering as eps-disks.
constexpr int kDefaultCanvasPx = 600;
constexpr double kWorldSpan = 2.1; // world width mapped onto the canvas

// eps making the half line width 1/300 of the canvas, independent of size.
double default_render_eps();

// Deterministic bytes for a fixed scene, size and format version.
std::string render_scene(const Scene& scene, int size_px, ImageFormat format);

} // namespace nestkit
