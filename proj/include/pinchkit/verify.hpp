#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pinchkit {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string format() const;
};

inline constexpr double kLinkingTolerance = 0.05;
// Below this the midpoint sums sit at double round-off and the error no longer
// tracks the sample count.
inline constexpr double kLinkingRoundoffFloor = 1e-10;

// Curve pairs for the linking suite: ordered coprime (p,q), p,q >= 2,
// pq <= 20, plus every pinch target reached from them.
std::vector<std::pair<std::int64_t, std::int64_t>> linking_test_pairs();

SuiteReport verify_linking(int samples = 1024);
SuiteReport verify_signature(std::int64_t max_index = 7);
SuiteReport verify_families(std::int64_t pq_cap = 2000);
SuiteReport verify_geography(std::int64_t pq_cap = 500);

// Dispatches on "linking", "signature", "families" or "geography". Throws
// std::invalid_argument for anything else.
SuiteReport run_suite(std::string_view name);

}  // namespace pinchkit
