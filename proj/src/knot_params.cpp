#include "pinchkit/knot_params.hpp"

#include <utility>

#include "pinchkit/checked.hpp"
#include "pinchkit/error.hpp"

namespace pinchkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kNotCoprime: return "NotCoprime";
    case ErrorCode::kBothEven: return "BothEven";
    case ErrorCode::kNonPositive: return "NonPositive";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kUnknotInput: return "UnknotInput";
    case ErrorCode::kBoundaryHit: return "BoundaryHit";
    case ErrorCode::kOddEuler: return "OddEuler";
    case ErrorCode::kInvalidBox: return "InvalidBox";
    case ErrorCode::kCurvesTooClose: return "CurvesTooClose";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

BezoutResult ext_gcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) {
    throw Error(ErrorCode::kNonPositive, "ext_gcd(0, 0) is undefined");
  }
  // Iterative Euclid on (a, b), tracking coefficients; signs fixed at the end.
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_x = std::exchange(x, old_x - quot * x);
    old_y = std::exchange(y, old_y - quot * y);
  }
  if (old_r < 0) {
    return {checked::neg(old_r), checked::neg(old_x), checked::neg(old_y)};
  }
  return {old_r, old_x, old_y};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 2) {
    throw Error(ErrorCode::kNotInvertible, "modulus " + std::to_string(m) + " must be >= 2");
  }
  std::int64_t reduced = a % m;
  if (reduced < 0) reduced += m;
  const BezoutResult bz = ext_gcd(reduced, m);
  if (bz.gcd != 1) {
    throw Error(ErrorCode::kNotInvertible,
                std::to_string(a) + " has no inverse modulo " + std::to_string(m));
  }
  std::int64_t inv = bz.x % m;
  if (inv < 0) inv += m;
  return inv;
}

TorusKnot TorusKnot::canonical(std::int64_t r, std::int64_t s) {
  if (r < 0 || s < 0 || (r == 0 && s == 0)) {
    throw Error(ErrorCode::kNonPositive,
                "canonical(" + std::to_string(r) + ", " + std::to_string(s) + ")");
  }
  if (r == 0 || s == 0) {
    // T(0,1) is the only coprime pair with a zero index.
    if (r + s != 1) {
      throw Error(ErrorCode::kNotCoprime,
                  "T(" + std::to_string(r) + ", " + std::to_string(s) + ") is a link");
    }
    return TorusKnot(0, 1);
  }
  return normalize(r, s);
}

TorusKnot normalize(std::int64_t p_raw, std::int64_t q_raw) {
  if (p_raw < 1 || q_raw < 1) {
    throw Error(ErrorCode::kNonPositive,
                "indices must be positive (got " + std::to_string(p_raw) + ", " +
                    std::to_string(q_raw) + ")");
  }
  if (p_raw % 2 == 0 && q_raw % 2 == 0) {
    throw Error(ErrorCode::kBothEven,
                "indices must be relatively prime; both " + std::to_string(p_raw) + " and " +
                    std::to_string(q_raw) + " are even");
  }
  if (ext_gcd(p_raw, q_raw).gcd != 1) {
    throw Error(ErrorCode::kNotCoprime,
                "indices must be relatively prime (gcd(" + std::to_string(p_raw) + ", " +
                    std::to_string(q_raw) + ") != 1)");
  }
  checked::index_product(p_raw, q_raw);

  std::int64_t p = p_raw;
  std::int64_t q = q_raw;
  if (p == 1) std::swap(p, q);
  if (q != 1) {
    if (q % 2 == 0) std::swap(p, q);
    if (p % 2 == 1 && p < q) std::swap(p, q);
  }
  return TorusKnot(p, q);
}

std::vector<TorusKnot> normalized_knots(std::int64_t pq_cap, bool include_unknots) {
  std::vector<TorusKnot> knots;
  for (std::int64_t p = 1; p <= pq_cap; ++p) {
    if (include_unknots) knots.push_back(TorusKnot(p, 1));
    for (std::int64_t q = 3; p >= 2 && p * q <= pq_cap; q += 2) {
      if (p % 2 == 1 && p < q) break;
      if (ext_gcd(p, q).gcd == 1) knots.push_back(TorusKnot(p, q));
    }
  }
  return knots;
}

std::string to_string(const TorusKnot& k) {
  return "T(" + std::to_string(k.p()) + "," + std::to_string(k.q()) + ")";
}

std::ostream& operator<<(std::ostream& os, const TorusKnot& k) { return os << to_string(k); }

}  // namespace pinchkit
