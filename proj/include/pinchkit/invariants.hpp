#pragma once

#include <cstdint>

#include "pinchkit/knot_params.hpp"
#include "pinchkit/pinch.hpp"

namespace pinchkit {

// Knot signature of T(p,q) from the lattice count over (i,j) in
// [1,p-1] x [1,q-1]: points with i/p + j/q in (0,1/2) or (3/2,2) count +1,
// points in (1/2,3/2) count -1. Exact integer comparisons throughout.
// Returns 0 for the unknot.
std::int64_t signature(const TorusKnot& k);

// 2*upsilon(T(p,q)) = b1(F) + (p0 - pq)/2, from the pinch sequence.
std::int64_t two_upsilon(const TorusKnot& k);
std::int64_t two_upsilon(const PinchSurface& surface);

struct KnotReport {
  TorusKnot knot;
  PinchSurface surface;
  std::int64_t b1;
  std::int64_t euler;
  std::int64_t p0;
  std::int64_t sigma;
  std::int64_t two_upsilon;
  bool is_jvc;
};

KnotReport knot_report(const TorusKnot& k);

namespace detail {
// O(pq) direct scan of the lattice; kept for cross-checking the row formula.
std::int64_t signature_by_scan(const TorusKnot& k);
}  // namespace detail

}  // namespace pinchkit
