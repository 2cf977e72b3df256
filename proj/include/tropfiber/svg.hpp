#pragma once

#include <string>
#include <vector>

#include "tropfiber/polytope.hpp"
#include "tropfiber/tropical.hpp"

namespace tropfiber {

struct RenderSpec {
  int width = 480;
  int height = 480;
  /** Extra room around the polytope's bounding box, in polytope units. */
  Rational margin{1, 4};
  std::vector<std::string> colors{"#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};
  double point_radius = 4;
};

/**
 * Polytope outline (one path per facet), each layer complex in its own color
 * (one path per cell), and an optional emphasized locus on top. Dimension 2 only.
 */
std::string render_svg(const Polytope& p, const std::vector<PLComplex>& layers, const PLComplex* locus,
                       const RenderSpec& spec = {});

}  // namespace tropfiber
