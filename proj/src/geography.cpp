#include "pinchkit/geography.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "pinchkit/bounds.hpp"
#include "pinchkit/checked.hpp"
#include "pinchkit/error.hpp"
#include "pinchkit/invariants.hpp"
#include "pinchkit/pinch.hpp"

namespace pinchkit {

namespace {

std::int64_t mod4(std::int64_t v) { return ((v % 4) + 4) % 4; }

}  // namespace

bool row_major_less(const LatticePoint& x, const LatticePoint& y) noexcept {
  return std::pair(x.b, x.e) < std::pair(y.b, y.e);
}

Wedge::Wedge(std::int64_t apex_e, std::int64_t apex_b) : apex_e_(apex_e), apex_b_(apex_b) {
  if (mod4(apex_e) != mod4(2 * apex_b)) {
    warning_ = "apex (" + std::to_string(apex_e) + ", " + std::to_string(apex_b) +
               ") violates e = 2b mod 4; the apex is not a member";
  }
}

bool Wedge::contains(std::int64_t e, std::int64_t b) const noexcept {
  if (e % 2 != 0) return false;
  if (mod4(e) != mod4(2 * b)) return false;
  const std::int64_t de = e > apex_e_ ? e - apex_e_ : apex_e_ - e;
  // |e - E|/2 <= b - B, with |e - E| even here.
  return de / 2 <= b - apex_b_;
}

LatticeBox::LatticeBox(std::int64_t e_min, std::int64_t e_max, std::int64_t b_min, std::int64_t b_max)
    : e_min(e_min), e_max(e_max), b_min(b_min), b_max(b_max) {
  if (e_min > e_max || b_min > b_max) {
    throw Error(ErrorCode::kInvalidBox,
                "box e in [" + std::to_string(e_min) + ", " + std::to_string(e_max) + "], b in [" +
                    std::to_string(b_min) + ", " + std::to_string(b_max) + "] is empty");
  }
}

Wedge pinch_wedge(const TorusKnot& k) {
  const PinchSurface surface = pinch_sequence(k);
  return Wedge(surface.euler, surface.b1());
}

Wedge sigma_wedge(const TorusKnot& k) { return Wedge(checked::mul(2, signature(k)), 0); }

Wedge upsilon_wedge(const TorusKnot& k) { return Wedge(checked::mul(2, two_upsilon(k)), 0); }

std::vector<LatticePoint> enumerate_intersection(const std::vector<Wedge>& wedges,
                                                 const LatticeBox& box) {
  std::vector<LatticePoint> points;
  for (std::int64_t b = box.b_min; b <= box.b_max; ++b) {
    // First even e at or above e_min.
    std::int64_t e = box.e_min % 2 == 0 ? box.e_min : box.e_min + 1;
    for (; e <= box.e_max; e += 2) {
      const bool inside = std::all_of(wedges.begin(), wedges.end(),
                                      [&](const Wedge& w) { return w.contains(e, b); });
      if (inside) points.push_back({e, b});
    }
  }
  return points;
}

std::vector<LatticePoint> enumerate_wedge(const Wedge& w, const LatticeBox& box) {
  return enumerate_intersection({w}, box);
}

std::vector<LatticePoint> outer_bound_set(const TorusKnot& k, const LatticeBox& box) {
  return enumerate_intersection({sigma_wedge(k), upsilon_wedge(k)}, box);
}

RealizableSet realizable_set(const TorusKnot& k, const LatticeBox& box) {
  std::vector<LatticePoint> inner = enumerate_wedge(pinch_wedge(k), box);
  if (is_jvc(k)) {
    std::vector<LatticePoint> outer = inner;
    return {RealizableStatus::kExact, std::move(inner), std::move(outer)};
  }
  return {RealizableStatus::kBoundsOnly, std::move(inner), outer_bound_set(k, box)};
}

std::vector<LatticePoint> wedge_closure_from_apex(const LatticePoint& apex, const LatticeBox& box) {
  if (apex.b > box.b_max) return {};
  // Any reachable target is reachable by a path that stays between the apex
  // column and the target column, plus one zig-zag step on either side.
  const std::int64_t lo = std::min(apex.e, box.e_min);
  const std::int64_t hi = std::max(apex.e, box.e_max);

  std::set<std::pair<std::int64_t, std::int64_t>> seen;  // (b, e)
  std::deque<LatticePoint> frontier{apex};
  seen.insert({apex.b, apex.e});
  while (!frontier.empty()) {
    const LatticePoint cur = frontier.front();
    frontier.pop_front();
    if (cur.b == box.b_max) continue;
    for (const std::int64_t de : {-2, 2}) {
      const LatticePoint next{cur.e + de, cur.b + 1};
      if (next.e < lo - 2 || next.e > hi + 2) continue;
      if (seen.insert({next.b, next.e}).second) frontier.push_back(next);
    }
  }

  std::vector<LatticePoint> points;
  for (const auto& [b, e] : seen) {
    const LatticePoint pt{e, b};
    if (box.contains(pt)) points.push_back(pt);
  }
  return points;
}

std::string to_string(RealizableStatus status) {
  return status == RealizableStatus::kExact ? "Exact" : "BoundsOnly";
}

}  // namespace pinchkit
