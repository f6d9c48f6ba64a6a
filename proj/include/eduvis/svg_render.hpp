#pragma once

#include <string>
#include <utility>

#include "eduvis/imaging.hpp"

namespace eduvis::svg {

// Rasterizes a standalone SVG document at intrinsic size, scaled down (never
// up) to fit within max_width x max_height with aspect ratio preserved.
// Supported subset: rect, circle, ellipse, line, polyline, polygon, path
// (M/L/H/V/C/Q/Z), text, g with translate()/scale(). Throws
// ErrorKind::render on malformed markup or a non-svg root.
imaging::Canvas rasterize(const std::string& svg_text, int max_width, int max_height);

// Width/height attributes when present, else the viewBox extent, else the
// conventional 300x150 default.
std::pair<double, double> intrinsic_size(const std::string& svg_text);

}  // namespace eduvis::svg
