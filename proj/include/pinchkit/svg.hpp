#pragma once

#include <string>
#include <vector>

#include "pinchkit/geography.hpp"
#include "pinchkit/knot_params.hpp"

namespace pinchkit {

struct LabeledPoint {
  LatticePoint point;
  std::string label;
};

// Known fillings other than the pinch surface, as (e, b) reference data.
// Currently only the genus-1 filling of T(4,9) with e = -34.
std::vector<LabeledPoint> reference_fillings(const TorusKnot& k);

// SVG 1.1 drawing of the (e, b) plane over box: e to the right, b upward,
// 16 px per lattice unit. Shades W_F, outlines W_sigma and W_upsilon, dots
// every parity-valid lattice point and marks the pinch apex and any reference
// fillings. Output depends only on (k, box).
std::string render_geography_svg(const TorusKnot& k, const LatticeBox& box);

// Plain-text listing of the realizable-set bounds over box.
std::string format_geography_listing(const TorusKnot& k, const LatticeBox& box);

}  // namespace pinchkit
