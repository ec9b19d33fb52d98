#include "pinchkit/invariants.hpp"

#include <algorithm>

#include "pinchkit/bounds.hpp"
#include "pinchkit/checked.hpp"
#include "pinchkit/error.hpp"

namespace pinchkit {

namespace {

__extension__ using i128 = __int128;

i128 floor_div(i128 a, i128 b) {
  i128 quot = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --quot;
  return quot;
}

[[noreturn]] void boundary_hit(const TorusKnot& k, std::int64_t i, i128 j) {
  throw Error(ErrorCode::kBoundaryHit,
              "lattice point (" + std::to_string(i) + ", " +
                  std::to_string(static_cast<std::int64_t>(j)) + ") of " + to_string(k) +
                  " lies on an interval boundary");
}

}  // namespace

std::int64_t signature(const TorusKnot& k) {
  if (k.is_unknot()) return 0;
  // The count is symmetric in (p,q); iterate rows over the smaller index.
  const i128 pq = checked::index_product(k.p(), k.q());
  const i128 a = std::min(k.p(), k.q());
  const i128 b = std::max(k.p(), k.q());
  const i128 cols = b - 1;

  std::int64_t sigma = 0;
  for (std::int64_t i = 1; i < a; ++i) {
    // Row i: the value 2(ib + ja) is increasing in j. Count j with
    // 2(ib + ja) < ab and with 2(ib + ja) > 3ab.
    const i128 low_num = pq - 2 * i * b;
    const i128 high_num = 3 * pq - 2 * i * b;
    const i128 den = 2 * a;
    if (low_num % den == 0 && low_num / den >= 1 && low_num / den <= cols) {
      boundary_hit(k, i, low_num / den);
    }
    if (high_num % den == 0 && high_num / den >= 1 && high_num / den <= cols) {
      boundary_hit(k, i, high_num / den);
    }
    // j < low_num/den  <=>  j <= ceil(low_num/den) - 1
    const i128 below = std::clamp<i128>(-floor_div(-low_num, den) - 1, 0, cols);
    // j > high_num/den  <=>  j >= floor(high_num/den) + 1
    const i128 above = std::clamp<i128>(cols - floor_div(high_num, den), 0, cols);
    const i128 middle = cols - below - above;
    sigma += static_cast<std::int64_t>(below + above - middle);
  }
  return sigma;
}

namespace detail {

std::int64_t signature_by_scan(const TorusKnot& k) {
  const i128 p = k.p();
  const i128 q = k.q();
  const i128 pq = p * q;
  std::int64_t sigma = 0;
  for (std::int64_t i = 1; i < p; ++i) {
    for (std::int64_t j = 1; j < q; ++j) {
      const i128 twice = 2 * (i * q + j * p);
      if (twice == pq || twice == 3 * pq) boundary_hit(k, i, j);
      sigma += (twice < pq || twice > 3 * pq) ? 1 : -1;
    }
  }
  return sigma;
}

}  // namespace detail

std::int64_t two_upsilon(const PinchSurface& surface) {
  const std::int64_t half_euler = surface.euler / 2;
  return checked::add(surface.b1(), half_euler);
}

std::int64_t two_upsilon(const TorusKnot& k) { return two_upsilon(pinch_sequence(k)); }

KnotReport knot_report(const TorusKnot& k) {
  PinchSurface surface = pinch_sequence(k);
  const std::int64_t b1 = surface.b1();
  const std::int64_t euler = surface.euler;
  const std::int64_t p0 = surface.p0;
  const std::int64_t sigma = signature(k);
  const std::int64_t tu = two_upsilon(surface);
  const bool jvc = satisfies_jvc_equality(tu, sigma, b1);
  return KnotReport{k, std::move(surface), b1, euler, p0, sigma, tu, jvc};
}

}  // namespace pinchkit
