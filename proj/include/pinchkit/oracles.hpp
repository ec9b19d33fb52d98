#pragma once

#include <cstdint>
#include <vector>

#include "pinchkit/knot_params.hpp"
#include "pinchkit/pinch.hpp"

namespace pinchkit::oracles {

// Closed (p,q) curve on the torus of revolution with radii R > r > 0:
//   phi(t) = 2 pi (p t + longitude_phase),  psi(t) = 2 pi (q t + phase),
//   t -> ((R + r cos psi) cos phi, (R + r cos psi) sin phi, -r sin psi).
// The z sign makes (p,q) with p,q > 0 a positive torus knot.
struct ParamCurve {
  std::int64_t p = 1;
  std::int64_t q = 0;
  double phase = 0.0;
  double longitude_phase = 0.0;
  double major_radius = 2.0;
  double minor_radius = 0.5;
};

// Parallel copy of c on the same torus, halfway between adjacent strands.
ParamCurve torus_pushoff(const ParamCurve& c);

// Uniform product midpoint rule for the Gauss linking integral
//   (1/4pi) int int ((c1' x c2') . (c1 - c2)) / |c1 - c2|^3.
// samples >= 64 per curve. Throws kCurvesTooClose when two sample points come
// within 1e-6 R of each other.
double gauss_linking(const ParamCurve& c1, const ParamCurve& c2, int samples);

// Linking number between T(p,q) drawn on the standard torus and its pushoff;
// should approach p*q.
double pushoff_linking(std::int64_t p, std::int64_t q, int samples);

// Checks step.step_euler = lk(target, pushoff) - lk(source, pushoff) using two
// quadratures. Throws kTooLarge when source p*q > 100.
bool verify_step_euler(const PinchStep& step, int samples);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Seifert form of the fiber surface of the closed positive braid
// (s_1 s_2 ... s_{p-1})^q, one basis loop per pair of consecutive bands in a
// braid column. Size (p-1)(q-1).
IntMatrix seifert_matrix(const TorusKnot& k);

// Signature of an integer symmetric matrix by exact rational congruence
// diagonalization. Throws std::invalid_argument for non-square or
// non-symmetric input.
std::int64_t symmetric_signature(const IntMatrix& m);

// sigma(V + V^T) for the braid Seifert form. Throws kTooLarge when
// (p-1)(q-1) > 64.
std::int64_t seifert_signature_oracle(const TorusKnot& k);

}  // namespace pinchkit::oracles
