#include <cstdint>

#include "doctest.h"
#include "pinchkit/error.hpp"
#include "pinchkit/invariants.hpp"
#include "pinchkit/knot_params.hpp"

using namespace pinchkit;

TEST_CASE("signature examples") {
  CHECK(signature(normalize(4, 9)) == -16);
  CHECK(signature(normalize(2, 3)) == -2);
  CHECK(signature(normalize(3, 4)) == -6);
  CHECK(signature(normalize(7, 3)) == -8);
  CHECK(signature(normalize(6, 5)) == -16);
  CHECK(signature(normalize(9, 1)) == 0);
}

TEST_CASE("signature row formula matches the direct lattice scan") {
  for (const TorusKnot& k : normalized_knots(3000, false)) {
    REQUIRE(signature(k) == detail::signature_by_scan(k));
  }
}

TEST_CASE("signature of T(2,q) is 1 - q") {
  for (std::int64_t q = 3; q <= 99; q += 2) {
    REQUIRE(signature(normalize(2, q)) == 1 - q);
    REQUIRE(detail::signature_by_scan(normalize(2, q)) == 1 - q);
  }
}

TEST_CASE("signature handles indices near the overflow cap") {
  const TorusKnot big = normalize(2, (std::int64_t{1} << 61) - 1);
  CHECK(signature(big) == 2 - (std::int64_t{1} << 61));
}

TEST_CASE("two_upsilon examples") {
  CHECK(two_upsilon(normalize(4, 9)) == -16);
  CHECK(two_upsilon(normalize(2, 3)) == -2);
  CHECK(two_upsilon(normalize(3, 4)) == -4);
  CHECK(two_upsilon(normalize(11, 1)) == 0);
  CHECK(two_upsilon(TorusKnot::canonical(0, 1)) == 0);
}

TEST_CASE("knot_report examples") {
  const KnotReport r49 = knot_report(normalize(4, 9));
  CHECK(r49.b1 == 2);
  CHECK(r49.euler == -36);
  CHECK(r49.p0 == 0);
  CHECK(r49.sigma == -16);
  CHECK(r49.two_upsilon == -16);
  CHECK_FALSE(r49.is_jvc);

  const KnotReport r34 = knot_report(normalize(3, 4));
  CHECK(r34.b1 == 1);
  CHECK(r34.euler == -10);
  CHECK(r34.p0 == 2);
  CHECK(r34.sigma == -6);
  CHECK(r34.two_upsilon == -4);
  CHECK(r34.is_jvc);

  const KnotReport r73 = knot_report(normalize(7, 3));
  CHECK(r73.b1 == 1);
  CHECK(r73.euler == -18);
  CHECK(r73.sigma == -8);
  CHECK(r73.two_upsilon == -8);
  CHECK_FALSE(r73.is_jvc);
}

TEST_CASE("report invariants hold for pq <= 2000") {
  for (const TorusKnot& k : normalized_knots(2000, true)) {
    const KnotReport r = knot_report(k);
    REQUIRE(r.sigma % 2 == 0);
    if (!k.is_unknot()) REQUIRE(r.sigma < 0);
    REQUIRE(r.two_upsilon % 2 == 0);
    REQUIRE(r.two_upsilon >= r.sigma);
    REQUIRE(2 * r.two_upsilon >= r.euler);
    REQUIRE(r.two_upsilon == r.b1 + r.euler / 2);
  }
}
