#include "pinchkit/pinch.hpp"

#include <cassert>
#include <string>

#include "pinchkit/checked.hpp"
#include "pinchkit/error.hpp"

namespace pinchkit {

PinchStep pinch_move(const TorusKnot& k) {
  if (k.is_unknot()) {
    throw Error(ErrorCode::kUnknotInput, "cannot pinch the unknot " + to_string(k));
  }
  const std::int64_t p = k.p();
  const std::int64_t q = k.q();

  std::int64_t t = (p - mod_inverse(q, p)) % p;
  const std::int64_t u = mod_inverse(p, q);

  std::int64_t r = checked::sub(p, checked::mul(2, t));
  std::int64_t s = checked::sub(q, checked::mul(2, u));
  // q is odd, so q - 2u never vanishes and the sign is always defined.
  assert(s != 0);
  const int sign = s > 0 ? 1 : -1;
  if (sign < 0) {
    r = -r;
    s = -s;
  }
  if (r < 0) {
    // The indices of a pinch result share a sign whenever both are nonzero.
    throw Error(ErrorCode::kNotCoprime,
                "pinch of " + to_string(k) + " produced mixed-sign pair (" + std::to_string(r) +
                    ", " + std::to_string(s) + ")");
  }

  const TorusKnot target = TorusKnot::canonical(r, s);
  const std::int64_t step_euler =
      checked::sub(checked::mul(target.p(), target.q()), checked::mul(p, q));
  return PinchStep{k, target, t, u, sign, step_euler};
}

PinchSurface pinch_sequence(const TorusKnot& k) {
  PinchSurface surface{k, {}, 0, 0};
  TorusKnot current = k;
  while (!current.is_unknot()) {
    surface.steps.push_back(pinch_move(current));
    current = surface.steps.back().target;
  }
  surface.p0 = current.p();
  surface.euler = checked::sub(surface.p0, checked::index_product(k.p(), k.q()));
  return surface;
}

}  // namespace pinchkit
