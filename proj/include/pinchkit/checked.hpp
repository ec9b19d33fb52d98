#pragma once

#include <cstdint>
#include <string>

#include "pinchkit/error.hpp"

namespace pinchkit::checked {

// Products of knot indices are capped here; 3pq still fits in 128-bit
// intermediates used by the signature count.
inline constexpr std::int64_t kProductLimit = std::int64_t{1} << 62;

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "addition " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "subtraction " + std::to_string(a) + " - " + std::to_string(b));
  }
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "multiplication " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

// p*q with the index-product cap applied.
inline std::int64_t index_product(std::int64_t p, std::int64_t q) {
  const std::int64_t pq = mul(p, q);
  if (pq > kProductLimit || pq < -kProductLimit) {
    throw Error(ErrorCode::kOverflow,
                "index product " + std::to_string(pq) + " exceeds 2^62");
  }
  return pq;
}

}  // namespace pinchkit::checked
