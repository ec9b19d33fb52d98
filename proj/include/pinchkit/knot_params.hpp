#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace pinchkit {

struct BezoutResult {
  std::int64_t gcd;
  std::int64_t x;
  std::int64_t y;
};

// gcd(|a|,|b|) together with coefficients satisfying a*x + b*y = gcd.
// Throws Error(kNonPositive) when both inputs are zero.
BezoutResult ext_gcd(std::int64_t a, std::int64_t b);

// Inverse of a modulo m, in [0, m-1]. Requires m >= 2 and gcd(a,m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Index pair of a positive torus knot in canonical form: q odd, gcd(p,q) = 1,
// and p > q when both are odd. Unknots have q = 1 (p may be 0 only as the end
// of a pinch sequence). Instances are only produced by normalize() or by the
// pinch calculus, so the invariants always hold.
class TorusKnot {
 public:
  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  bool is_unknot() const noexcept { return q_ == 1; }

  // Bring an already signed-corrected pair (r >= 0, s >= 1, coprime) into
  // canonical form. Used for pinch targets, where r = 0 is possible.
  static TorusKnot canonical(std::int64_t r, std::int64_t s);

  friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
  friend auto operator<=>(const TorusKnot&, const TorusKnot&) = default;

 private:
  TorusKnot(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}

  std::int64_t p_;
  std::int64_t q_;

  friend TorusKnot normalize(std::int64_t, std::int64_t);
  friend std::vector<TorusKnot> normalized_knots(std::int64_t, bool);
};

// Validates a raw positive index pair and swaps it into canonical form.
// Errors: kNonPositive, kBothEven, kNotCoprime, kOverflow (p*q > 2^62).
TorusKnot normalize(std::int64_t p_raw, std::int64_t q_raw);

// Every normalized knot with p*q <= pq_cap, sorted by (p, q). Unknots T(k,1),
// k >= 1, are included on request.
std::vector<TorusKnot> normalized_knots(std::int64_t pq_cap, bool include_unknots);

std::string to_string(const TorusKnot& k);
std::ostream& operator<<(std::ostream& os, const TorusKnot& k);

}  // namespace pinchkit
