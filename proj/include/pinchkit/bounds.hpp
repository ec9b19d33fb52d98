#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pinchkit/knot_params.hpp"

namespace pinchkit {

// Signature bound |sigma(K) - e/2| <= gamma_4^e(K). Throws kOddEuler for odd e.
std::int64_t gl_bound(const TorusKnot& k, std::int64_t e);

// Upsilon bound |2 upsilon(K) - e/2| <= gamma_4^e(K). Throws kOddEuler for odd e.
std::int64_t oss_bound(const TorusKnot& k, std::int64_t e);

// |upsilon - sigma/2| <= gamma_4(K), returned as |2 upsilon - sigma| / 2.
std::int64_t gamma4_lower_bound(const TorusKnot& k);

// max(gl_bound, oss_bound). Only a lower bound: exactness is known at the
// pinch surface's Euler number alone (see gamma4e_at_pinch).
std::int64_t gamma4e_lower_bound(const TorusKnot& k, std::int64_t e);

struct RefinedGenus {
  std::int64_t euler;
  std::int64_t gamma;

  friend bool operator==(const RefinedGenus&, const RefinedGenus&) = default;
};

// (e(F), gamma_4^e) at e = e(F(p,q)), where the pinch surface is a minimizer:
// b1(F) >= gamma_4^e >= oss_bound(k, e(F)) = b1(F). The collapse of that chain
// is checked on every call; a mismatch throws std::logic_error.
RefinedGenus gamma4e_at_pinch(const TorusKnot& k);

// 2 upsilon - sigma = 2 b1(F).
bool satisfies_jvc_equality(std::int64_t two_upsilon, std::int64_t sigma, std::int64_t b1) noexcept;
bool is_jvc(const TorusKnot& k);

enum class JvcFamily {
  kKMplus1_M,        // T(km+1, m), k >= 1, m > 1, k and m odd
  kThree_k,          // T(3, k), k >= 2
  kTwoK_TwoKminus1,  // T(2k, 2k-1)
};

std::string_view to_string(JvcFamily family) noexcept;

// Families whose index pattern matches the unordered pair {p, q}, sorted by
// tag name.
std::vector<JvcFamily> jvc_family_tags(const TorusKnot& k);

// The JVC status a family predicts for k, when a matching family makes a
// prediction. Three_k predicts true iff k = 4, 5 mod 6; the other two always
// predict true.
bool family_predicts_jvc(JvcFamily family, const TorusKnot& k);

}  // namespace pinchkit
