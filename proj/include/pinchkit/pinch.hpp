#pragma once

#include <cstdint>
#include <vector>

#include "pinchkit/knot_params.hpp"

namespace pinchkit {

// One non-orientable band move T(p,q) -> T(r,s) on the standard torus.
struct PinchStep {
  TorusKnot source;
  TorusKnot target;
  std::int64_t t;           // t = -q^{-1} mod p, in [0, p-1]
  std::int64_t u;           // u = p^{-1} mod q, in [0, q-1]
  int sign;                 // sgn(q - 2u)
  std::int64_t step_euler;  // r*s - p*q, normal Euler number of the band cobordism

  friend bool operator==(const PinchStep&, const PinchStep&) = default;
};

// Pinch surface F(p,q): the forced sequence of pinch moves down to an unknot
// T(p0,1), capped by a disk.
struct PinchSurface {
  TorusKnot knot;
  std::vector<PinchStep> steps;
  std::int64_t p0;
  std::int64_t euler;  // p0 - pq

  // First Betti number: one band per pinch.
  std::int64_t b1() const noexcept { return static_cast<std::int64_t>(steps.size()); }

  friend bool operator==(const PinchSurface&, const PinchSurface&) = default;
};

// Throws Error(kUnknotInput) when k.q() == 1.
PinchStep pinch_move(const TorusKnot& k);

PinchSurface pinch_sequence(const TorusKnot& k);

}  // namespace pinchkit
