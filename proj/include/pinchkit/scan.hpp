#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pinchkit/invariants.hpp"
#include "pinchkit/knot_params.hpp"

namespace pinchkit {

enum class ScanFormat { kCsv, kJson };

struct ScanConfig {
  std::int64_t p_max = 0;  // 0 means bounded by pq_cap only
  std::int64_t q_max = 0;
  std::int64_t pq_cap = 0;
  ScanFormat format = ScanFormat::kCsv;
  bool parallel = false;
  std::filesystem::path output_path;
};

// Throws kInvalidConfig for pq_cap < 1 or > 2^62, or p_max/q_max in {1}.
void validate(const ScanConfig& cfg);

struct ScanRow {
  std::int64_t p;
  std::int64_t q;
  std::int64_t n;
  std::int64_t p0;
  std::int64_t b1;
  std::int64_t e;
  std::int64_t sigma;
  std::int64_t two_upsilon;
  std::int64_t gamma4_lb;
  bool jvc;
  std::string family_tags;  // sorted tokens joined by ';'

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

inline constexpr std::string_view kScanHeader =
    "p,q,n,p0,b1,e,sigma,two_upsilon,gamma4_lb,jvc,family_tags";

// Nontrivial normalized knots (q >= 3) within the config's limits, sorted by
// (p, q).
std::vector<TorusKnot> scan_knots(const ScanConfig& cfg);

ScanRow make_scan_row(const TorusKnot& k);

// Rows for scan_knots(cfg); with cfg.parallel the knots are spread over a
// worker pool and gathered back in (p, q) order.
std::vector<ScanRow> compute_scan(const ScanConfig& cfg);

std::string format_csv(const std::vector<ScanRow>& rows);
std::string format_json(const std::vector<ScanRow>& rows);

// Parses text produced by format_csv. Throws kInvalidConfig on a malformed
// header or row.
std::vector<ScanRow> parse_csv(std::string_view text);

std::string join_family_tags(const TorusKnot& k);

// Writes bytes to path, replacing any existing file. Throws kIo.
void write_file(const std::filesystem::path& path, std::string_view bytes);

// compute_scan + format + write_file. Returns the number of rows.
std::size_t run_scan(const ScanConfig& cfg);

}  // namespace pinchkit
