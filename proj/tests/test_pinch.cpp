#include <cstdint>

#include "doctest.h"
#include "pinchkit/error.hpp"
#include "pinchkit/knot_params.hpp"
#include "pinchkit/pinch.hpp"

using namespace pinchkit;

namespace {

struct Witness {
  std::int64_t t;
  std::int64_t u;
};

// Scan t in [0,p-1], u in [0,q-1] for t*q = -1 mod p and u*p = 1 mod q.
Witness scan_witnesses(std::int64_t p, std::int64_t q) {
  Witness w{-1, -1};
  for (std::int64_t t = 0; t < p; ++t) {
    if ((t * q + 1) % p == 0) w.t = t;
  }
  for (std::int64_t u = 0; u < q; ++u) {
    if ((u * p) % q == 1 % q) w.u = u;
  }
  return w;
}

}  // namespace

TEST_CASE("pinch_move T(4,9)") {
  const PinchStep s = pinch_move(normalize(4, 9));
  CHECK(s.t == 3);
  CHECK(s.u == 7);
  CHECK(s.sign == -1);
  CHECK(s.target == normalize(2, 5));
  CHECK(s.step_euler == -26);
  const Witness w = scan_witnesses(4, 9);
  CHECK(s.t == w.t);
  CHECK(s.u == w.u);
}

TEST_CASE("pinch_move T(2,5) and T(2,3) end at T(0,1)") {
  const PinchStep s25 = pinch_move(normalize(2, 5));
  CHECK(s25.t == 1);
  CHECK(s25.u == 3);
  CHECK(s25.sign == -1);
  CHECK(s25.target == TorusKnot::canonical(0, 1));
  CHECK(s25.step_euler == -10);

  // 2u = 1 mod 3 gives u = 2, so q - 2u = -1 and the raw pair (0,-1) flips.
  const PinchStep s23 = pinch_move(normalize(2, 3));
  CHECK(s23.t == 1);
  CHECK(s23.u == 2);
  CHECK(scan_witnesses(2, 3).u == 2);
  CHECK(s23.sign == -1);
  CHECK(s23.target == TorusKnot::canonical(0, 1));
  CHECK(s23.step_euler == -6);
}

TEST_CASE("pinch_move rejects the unknot") {
  CHECK_THROWS_AS(pinch_move(normalize(5, 1)), Error);
  try {
    pinch_move(TorusKnot::canonical(0, 1));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknotInput);
  }
}

TEST_CASE("pinch_sequence examples") {
  const PinchSurface f49 = pinch_sequence(normalize(4, 9));
  REQUIRE(f49.b1() == 2);
  CHECK(f49.steps[0].target == normalize(2, 5));
  CHECK(f49.steps[1].target.p() == 0);
  CHECK(f49.p0 == 0);
  CHECK(f49.euler == -36);

  const PinchSurface f65 = pinch_sequence(normalize(6, 5));
  REQUIRE(f65.b1() == 2);
  CHECK(f65.steps[0].target == normalize(4, 3));
  CHECK(f65.steps[1].target == normalize(2, 1));
  CHECK(f65.steps[0].sign == 1);
  CHECK(f65.steps[1].sign == 1);
  CHECK(f65.p0 == 2);
  CHECK(f65.euler == -28);

  const PinchSurface unknot = pinch_sequence(normalize(7, 1));
  CHECK(unknot.b1() == 0);
  CHECK(unknot.p0 == 7);
  CHECK(unknot.euler == 0);
}

TEST_CASE("pinch sequences satisfy the step invariants for pq <= 2000") {
  for (const TorusKnot& k : normalized_knots(2000, true)) {
    const PinchSurface f = pinch_sequence(k);
    std::int64_t euler_sum = 0;
    TorusKnot expected_source = k;
    for (const PinchStep& s : f.steps) {
      const std::int64_t p = s.source.p();
      const std::int64_t q = s.source.q();
      REQUIRE(s.source == expected_source);
      const Witness w = p * q <= 400 ? scan_witnesses(p, q) : Witness{s.t, s.u};
      REQUIRE(s.t == w.t);
      REQUIRE(s.u == w.u);
      REQUIRE(((s.t * q) % p + 1) % p == 0);
      REQUIRE((s.u * p) % q == 1);
      REQUIRE(s.sign == (q - 2 * s.u > 0 ? 1 : -1));
      // Strict descent and parity preservation.
      REQUIRE(s.target.p() < p);
      REQUIRE(s.target.q() < q);
      REQUIRE(s.target.p() % 2 == p % 2);
      REQUIRE(s.target.q() % 2 == q % 2);
      REQUIRE(s.target.p() == s.sign * (p - 2 * s.t));
      REQUIRE(s.step_euler == s.target.p() * s.target.q() - p * q);
      REQUIRE(s.step_euler % 2 == 0);
      euler_sum += s.step_euler;
      expected_source = s.target;
    }
    REQUIRE(expected_source.q() == 1);
    REQUIRE(f.p0 == expected_source.p());
    REQUIRE(euler_sum == f.euler);
    REQUIRE(f.euler == f.p0 - k.p() * k.q());
    REQUIRE(((f.euler - 2 * f.b1()) % 4 + 4) % 4 == 0);
    REQUIRE(f.b1() < k.q() / 2 + 1);
  }
}

TEST_CASE("pinch_sequence is deterministic") {
  for (const TorusKnot& k : normalized_knots(300, false)) {
    REQUIRE(pinch_sequence(k) == pinch_sequence(k));
  }
}
