#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pinchkit/knot_params.hpp"

namespace pinchkit {

// A lattice point (normal Euler number, first Betti number).
struct LatticePoint {
  std::int64_t e;
  std::int64_t b;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Enumeration order: b ascending, then e ascending.
bool row_major_less(const LatticePoint& x, const LatticePoint& y) noexcept;

// W_(E,B) = { (e,b) : e even, |e - E|/2 <= b - B, e = 2b mod 4 }, stored by
// its apex. Apexes with E != 2B mod 4 are accepted (the apex itself is then not
// a member) and carry a warning.
class Wedge {
 public:
  Wedge(std::int64_t apex_e, std::int64_t apex_b);

  std::int64_t apex_e() const noexcept { return apex_e_; }
  std::int64_t apex_b() const noexcept { return apex_b_; }
  LatticePoint apex() const noexcept { return {apex_e_, apex_b_}; }

  bool contains(std::int64_t e, std::int64_t b) const noexcept;
  bool contains(const LatticePoint& pt) const noexcept { return contains(pt.e, pt.b); }

  const std::optional<std::string>& warning() const noexcept { return warning_; }

  friend bool operator==(const Wedge& x, const Wedge& y) noexcept {
    return x.apex_e_ == y.apex_e_ && x.apex_b_ == y.apex_b_;
  }

 private:
  std::int64_t apex_e_;
  std::int64_t apex_b_;
  std::optional<std::string> warning_;
};

inline bool wedge_contains(const Wedge& w, std::int64_t e, std::int64_t b) noexcept {
  return w.contains(e, b);
}

// Finite window e in [e_min, e_max], b in [b_min, b_max]. Throws kInvalidBox
// when a range is reversed.
struct LatticeBox {
  std::int64_t e_min;
  std::int64_t e_max;
  std::int64_t b_min;
  std::int64_t b_max;

  LatticeBox(std::int64_t e_min, std::int64_t e_max, std::int64_t b_min, std::int64_t b_max);

  bool contains(const LatticePoint& pt) const noexcept {
    return pt.e >= e_min && pt.e <= e_max && pt.b >= b_min && pt.b <= b_max;
  }
};

Wedge pinch_wedge(const TorusKnot& k);    // apex (e(F), b1(F))
Wedge sigma_wedge(const TorusKnot& k);    // apex (2 sigma, 0)
Wedge upsilon_wedge(const TorusKnot& k);  // apex (4 upsilon, 0)

std::vector<LatticePoint> enumerate_wedge(const Wedge& w, const LatticeBox& box);

// Members of every wedge in `wedges` within box.
std::vector<LatticePoint> enumerate_intersection(const std::vector<Wedge>& wedges,
                                                 const LatticeBox& box);

// W_sigma intersect W_upsilon, the outer bound on the realizable set.
std::vector<LatticePoint> outer_bound_set(const TorusKnot& k, const LatticeBox& box);

enum class RealizableStatus { kExact, kBoundsOnly };

struct RealizableSet {
  RealizableStatus status;
  std::vector<LatticePoint> inner;  // W_F, always realizable
  std::vector<LatticePoint> outer;  // W_sigma intersect W_upsilon
};

// For JVC knots both bounds agree with W_F and the result is exact.
RealizableSet realizable_set(const TorusKnot& k, const LatticeBox& box);

// Breadth-first closure of {apex} under (e+2, b+1) and (e-2, b+1), restricted
// to box.
std::vector<LatticePoint> wedge_closure_from_apex(const LatticePoint& apex, const LatticeBox& box);

std::string to_string(RealizableStatus status);

}  // namespace pinchkit
