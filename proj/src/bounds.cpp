#include "pinchkit/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pinchkit/checked.hpp"
#include "pinchkit/error.hpp"
#include "pinchkit/invariants.hpp"
#include "pinchkit/pinch.hpp"

namespace pinchkit {

namespace {

void require_even(std::int64_t e) {
  if (e % 2 != 0) {
    throw Error(ErrorCode::kOddEuler, "normal Euler number " + std::to_string(e) + " is odd");
  }
}

// Returns m and the cofactor k when {a, b} = {km+1, m}; k = 0 when no match.
std::int64_t km_plus_one_cofactor(std::int64_t big, std::int64_t m) {
  if (m <= 1 || m % 2 == 0 || big <= 1) return 0;
  if ((big - 1) % m != 0) return 0;
  const std::int64_t k = (big - 1) / m;
  return (k >= 1 && k % 2 == 1) ? k : 0;
}

}  // namespace

std::int64_t gl_bound(const TorusKnot& k, std::int64_t e) {
  require_even(e);
  return checked::abs(checked::sub(signature(k), e / 2));
}

std::int64_t oss_bound(const TorusKnot& k, std::int64_t e) {
  require_even(e);
  return checked::abs(checked::sub(two_upsilon(k), e / 2));
}

std::int64_t gamma4_lower_bound(const TorusKnot& k) {
  return checked::abs(checked::sub(two_upsilon(k), signature(k))) / 2;
}

std::int64_t gamma4e_lower_bound(const TorusKnot& k, std::int64_t e) {
  return std::max(gl_bound(k, e), oss_bound(k, e));
}

RefinedGenus gamma4e_at_pinch(const TorusKnot& k) {
  const PinchSurface surface = pinch_sequence(k);
  const std::int64_t lower = oss_bound(k, surface.euler);
  if (lower != surface.b1()) {
    throw std::logic_error("upsilon bound " + std::to_string(lower) + " at e(F) = " +
                           std::to_string(surface.euler) + " differs from b1(F) = " +
                           std::to_string(surface.b1()) + " for " + to_string(k));
  }
  return {surface.euler, surface.b1()};
}

bool satisfies_jvc_equality(std::int64_t two_upsilon, std::int64_t sigma, std::int64_t b1) noexcept {
  return two_upsilon - sigma == 2 * b1;
}

bool is_jvc(const TorusKnot& k) {
  const PinchSurface surface = pinch_sequence(k);
  return satisfies_jvc_equality(two_upsilon(surface), signature(k), surface.b1());
}

std::string_view to_string(JvcFamily family) noexcept {
  switch (family) {
    case JvcFamily::kKMplus1_M: return "KMplus1_M";
    case JvcFamily::kThree_k: return "Three_k";
    case JvcFamily::kTwoK_TwoKminus1: return "TwoK_TwoKminus1";
  }
  return "?";
}

std::vector<JvcFamily> jvc_family_tags(const TorusKnot& k) {
  const std::int64_t a = k.p();
  const std::int64_t b = k.q();
  std::vector<JvcFamily> tags;

  if (km_plus_one_cofactor(a, b) != 0 || km_plus_one_cofactor(b, a) != 0) {
    tags.push_back(JvcFamily::kKMplus1_M);
  }
  if ((a == 3 && b >= 2) || (b == 3 && a >= 2)) {
    tags.push_back(JvcFamily::kThree_k);
  }
  const auto two_k_pair = [](std::int64_t even, std::int64_t odd) {
    return even >= 2 && even % 2 == 0 && odd == even - 1;
  };
  if (two_k_pair(a, b) || two_k_pair(b, a)) {
    tags.push_back(JvcFamily::kTwoK_TwoKminus1);
  }
  return tags;
}

bool family_predicts_jvc(JvcFamily family, const TorusKnot& k) {
  if (family == JvcFamily::kThree_k) {
    const std::int64_t other = k.p() == 3 ? k.q() : k.p();
    return other % 6 == 4 || other % 6 == 5;
  }
  return true;
}

}  // namespace pinchkit
