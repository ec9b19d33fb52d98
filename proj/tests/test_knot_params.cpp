#include <cstdint>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "pinchkit/error.hpp"
#include "pinchkit/knot_params.hpp"

using namespace pinchkit;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected pinchkit::Error");
  return ErrorCode::kIo;
}

// Residue scan, independent of the Euclidean route.
std::int64_t inverse_by_scan(std::int64_t a, std::int64_t m) {
  for (std::int64_t x = 0; x < m; ++x) {
    if ((((a % m) + m) % m * x) % m == 1) return x;
  }
  return -1;
}

}  // namespace

TEST_CASE("ext_gcd satisfies the Bezout identity on the listed pairs") {
  const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> cases = {
      {4, 9, 1}, {1, 1, 1}, {6, 4, 2}, {0, 7, 7}, {-12, 18, 6}};
  for (const auto& [a, b, g] : cases) {
    const BezoutResult r = ext_gcd(a, b);
    CHECK(r.gcd == g);
    CHECK(a * r.x + b * r.y == r.gcd);
  }
  // (4,9) -> x = -2, y = 1 is the pair Euclid produces.
  const BezoutResult r = ext_gcd(4, 9);
  CHECK(r.x == -2);
  CHECK(r.y == 1);
  CHECK(code_of([] { ext_gcd(0, 0); }) == ErrorCode::kNonPositive);
}

TEST_CASE("ext_gcd Bezout identity on sampled pairs up to 10^4") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-10000, 10000);
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t a = dist(rng);
    const std::int64_t b = dist(rng);
    if (a == 0 && b == 0) continue;
    const BezoutResult r = ext_gcd(a, b);
    REQUIRE(r.gcd == std::gcd(a, b));
    REQUIRE(a * r.x + b * r.y == r.gcd);
  }
}

TEST_CASE("mod_inverse examples") {
  CHECK(mod_inverse(9, 4) == 1);
  CHECK(mod_inverse(4, 9) == 7);
  CHECK(mod_inverse(1, 2) == 1);
  CHECK(mod_inverse(1, 997) == 1);
  CHECK(mod_inverse(-1, 7) == 6);
  CHECK(code_of([] { mod_inverse(6, 4); }) == ErrorCode::kNotInvertible);
  CHECK(code_of([] { mod_inverse(3, 1); }) == ErrorCode::kNotInvertible);
}

TEST_CASE("mod_inverse agrees with an exhaustive residue scan for m <= 1000") {
  for (std::int64_t m = 2; m <= 1000; ++m) {
    for (std::int64_t a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      REQUIRE(mod_inverse(a, m) == inverse_by_scan(a, m));
    }
  }
}

TEST_CASE("normalize puts index pairs into canonical form") {
  CHECK(normalize(9, 4) == normalize(4, 9));
  CHECK(normalize(9, 4).p() == 4);
  CHECK(normalize(9, 4).q() == 9);
  CHECK(normalize(3, 2).p() == 2);
  CHECK(normalize(3, 2).q() == 3);
  CHECK(normalize(3, 5).p() == 5);
  CHECK(normalize(3, 5).q() == 3);
  CHECK(normalize(4, 3).p() == 4);
}

TEST_CASE("normalize errors") {
  CHECK(code_of([] { normalize(2, 4); }) == ErrorCode::kBothEven);
  CHECK(code_of([] { normalize(3, 9); }) == ErrorCode::kNotCoprime);
  CHECK(code_of([] { normalize(0, 3); }) == ErrorCode::kNonPositive);
  CHECK(code_of([] { normalize(-2, 3); }) == ErrorCode::kNonPositive);
  CHECK(code_of([] { normalize(std::int64_t{1} << 32, (std::int64_t{1} << 31) + 1); }) ==
        ErrorCode::kOverflow);
}

TEST_CASE("unknots are detected by predicate, not by structure") {
  const TorusKnot a = normalize(5, 1);
  const TorusKnot b = normalize(1, 5);
  const TorusKnot c = normalize(1, 1);
  const TorusKnot zero = TorusKnot::canonical(0, 1);
  CHECK(a.is_unknot());
  CHECK(b.is_unknot());
  CHECK(c.is_unknot());
  CHECK(zero.is_unknot());
  CHECK(a == b);
  CHECK_FALSE(c == zero);
  CHECK(normalize(1, 6).p() == 6);
  CHECK(normalize(1, 6).q() == 1);
  CHECK_FALSE(normalize(2, 3).is_unknot());
}

TEST_CASE("normalize is symmetric and satisfies the type invariants") {
  for (std::int64_t a = 1; a <= 60; ++a) {
    for (std::int64_t b = 1; b <= 60; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const TorusKnot k = normalize(a, b);
      REQUIRE(k == normalize(b, a));
      REQUIRE(std::gcd(k.p(), k.q()) == 1);
      REQUIRE(k.q() % 2 == 1);
      if (k.p() % 2 == 1 && k.q() != 1) REQUIRE(k.p() > k.q());
      REQUIRE(k.p() * k.q() == a * b);
      REQUIRE(k.is_unknot() == (a == 1 || b == 1));
    }
  }
}

TEST_CASE("normalized_knots lists canonical pairs in (p, q) order") {
  const auto knots = normalized_knots(20, false);
  REQUIRE(knots.size() == 7);
  CHECK(knots.front() == normalize(2, 3));
  CHECK(knots.back() == normalize(5, 3));
  for (std::size_t i = 1; i < knots.size(); ++i) CHECK(knots[i - 1] < knots[i]);
  const auto with_unknots = normalized_knots(20, true);
  CHECK(with_unknots.size() == 27);
}
