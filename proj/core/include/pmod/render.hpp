#pragma once
// Deterministic SVG rendering of 2-parameter modules: one cell per grid point,
// shaded by pointwise dimension, with support boundary outlines.

#include <string>

#include "pmod/module.hpp"

namespace pmod {

struct RenderOptions {
  int cell = 12;       // pixels per grid cell
  int max_shade = 4;   // dimensions at or above this share the darkest shade
  bool axes = true;
};

std::string render_svg(const Module& M, RenderOptions opt = {});

}  // namespace pmod
