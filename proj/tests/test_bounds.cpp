#include <algorithm>
#include <cstdint>

#include "doctest.h"
#include "pinchkit/bounds.hpp"
#include "pinchkit/error.hpp"
#include "pinchkit/invariants.hpp"
#include "pinchkit/knot_params.hpp"
#include "pinchkit/pinch.hpp"

using namespace pinchkit;

namespace {

bool has_tag(const TorusKnot& k, JvcFamily f) {
  const auto tags = jvc_family_tags(k);
  return std::find(tags.begin(), tags.end(), f) != tags.end();
}

}  // namespace

TEST_CASE("gl_bound examples") {
  CHECK(gl_bound(normalize(4, 9), -36) == 2);
  CHECK(gl_bound(normalize(4, 9), -32) == 0);
  CHECK(gl_bound(normalize(2, 3), -6) == 1);
}

TEST_CASE("oss_bound examples") {
  CHECK(oss_bound(normalize(4, 9), -36) == 2);
  CHECK(oss_bound(normalize(4, 9), -34) == 1);
  CHECK(oss_bound(normalize(1, 1), 0) == 0);
}

TEST_CASE("odd Euler numbers are rejected") {
  try {
    gl_bound(normalize(2, 3), -5);
    FAIL("expected OddEuler");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOddEuler);
  }
  CHECK_THROWS_AS(oss_bound(normalize(2, 3), 3), Error);
}

TEST_CASE("gamma4_lower_bound examples") {
  CHECK(gamma4_lower_bound(normalize(3, 4)) == 1);
  CHECK(gamma4_lower_bound(normalize(4, 9)) == 0);
  CHECK(gamma4_lower_bound(normalize(2, 3)) == 0);
}

TEST_CASE("gamma4e_at_pinch examples") {
  CHECK(gamma4e_at_pinch(normalize(4, 9)) == RefinedGenus{-36, 2});
  CHECK(gamma4e_at_pinch(normalize(2, 3)) == RefinedGenus{-6, 1});
  CHECK(gamma4e_at_pinch(normalize(3, 1)) == RefinedGenus{0, 0});
}

TEST_CASE("gamma4e_lower_bound away from the pinch Euler number") {
  const TorusKnot k = normalize(4, 9);
  CHECK(gamma4e_lower_bound(k, -34) == 1);
  CHECK(gamma4e_lower_bound(k, -32) == 0);
  CHECK(gamma4e_lower_bound(k, -40) == 4);
}

TEST_CASE("refined Batson identity and signature consistency for pq <= 2000") {
  for (const TorusKnot& k : normalized_knots(2000, true)) {
    const PinchSurface f = pinch_sequence(k);
    REQUIRE(oss_bound(k, f.euler) == f.b1());
    REQUIRE(gl_bound(k, f.euler) <= f.b1());
    REQUIRE(gamma4e_at_pinch(k).gamma == f.b1());
  }
}

TEST_CASE("is_jvc examples") {
  CHECK(is_jvc(normalize(3, 4)));
  CHECK_FALSE(is_jvc(normalize(7, 3)));
  CHECK(is_jvc(normalize(6, 5)));
  CHECK_FALSE(is_jvc(normalize(4, 9)));
  CHECK(is_jvc(normalize(1, 1)));
}

TEST_CASE("jvc_family_tags examples") {
  const auto t43 = jvc_family_tags(normalize(4, 3));
  // T(4,3) = T(3+1, 3) also matches km+1 with k = 1, m = 3.
  CHECK(has_tag(normalize(4, 3), JvcFamily::kTwoK_TwoKminus1));
  CHECK(has_tag(normalize(4, 3), JvcFamily::kThree_k));
  CHECK(has_tag(normalize(4, 3), JvcFamily::kKMplus1_M));
  CHECK(t43.size() == 3);

  const auto t53 = jvc_family_tags(normalize(5, 3));
  REQUIRE(t53.size() == 1);
  CHECK(t53[0] == JvcFamily::kThree_k);

  CHECK(jvc_family_tags(normalize(4, 9)).empty());
  CHECK(jvc_family_tags(normalize(3, 1)).empty());
  CHECK(has_tag(normalize(10, 3), JvcFamily::kKMplus1_M));
  CHECK_FALSE(has_tag(normalize(7, 3), JvcFamily::kKMplus1_M));  // k = 2 is even
}

TEST_CASE("tags come out sorted by name") {
  for (const TorusKnot& k : normalized_knots(500, false)) {
    const auto tags = jvc_family_tags(k);
    REQUIRE(std::is_sorted(tags.begin(), tags.end(), [](JvcFamily a, JvcFamily b) {
      return to_string(a) < to_string(b);
    }));
  }
}

TEST_CASE("family soundness for pq <= 2000") {
  for (const TorusKnot& k : normalized_knots(2000, false)) {
    const bool jvc = is_jvc(k);
    for (const JvcFamily tag : jvc_family_tags(k)) {
      INFO(to_string(k), " ", to_string(tag));
      REQUIRE(family_predicts_jvc(tag, k) == jvc);
    }
  }
}

TEST_CASE("JVC knots satisfy the linear relations between e, upsilon, sigma and b1") {
  for (const TorusKnot& k : normalized_knots(2000, true)) {
    if (!is_jvc(k)) continue;
    const KnotReport r = knot_report(k);
    REQUIRE(r.euler == 2 * r.two_upsilon - 2 * r.b1);
    REQUIRE(2 * r.two_upsilon == 2 * r.sigma + 4 * r.b1);
    REQUIRE(r.euler == 2 * r.sigma + 2 * r.b1);
  }
}
