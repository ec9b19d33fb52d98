#include "pinchkit/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include "json.hpp"

#include "pinchkit/bounds.hpp"
#include "pinchkit/checked.hpp"
#include "pinchkit/error.hpp"

namespace pinchkit {

namespace {

std::int64_t parse_int(std::string_view field, std::size_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::kInvalidConfig,
                "line " + std::to_string(line) + ": bad integer '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

void validate(const ScanConfig& cfg) {
  if (cfg.pq_cap < 1 || cfg.pq_cap > checked::kProductLimit) {
    throw Error(ErrorCode::kInvalidConfig, "pq cap must lie in [1, 2^62]");
  }
  if (cfg.p_max == 1 || cfg.q_max == 1 || cfg.p_max < 0 || cfg.q_max < 0) {
    throw Error(ErrorCode::kInvalidConfig, "p_max and q_max must be >= 2");
  }
}

std::vector<TorusKnot> scan_knots(const ScanConfig& cfg) {
  validate(cfg);
  const std::int64_t cap = cfg.pq_cap;
  const std::int64_t p_limit = cfg.p_max > 0 ? cfg.p_max : cap / 3;
  std::vector<TorusKnot> knots;
  for (std::int64_t p = 2; p <= p_limit && p * 3 <= cap; ++p) {
    const std::int64_t q_limit = std::min(cap / p, cfg.q_max > 0 ? cfg.q_max : cap);
    for (std::int64_t q = 3; q <= q_limit; q += 2) {
      if (p % 2 == 1 && p < q) break;
      if (ext_gcd(p, q).gcd != 1) continue;
      knots.push_back(normalize(p, q));
    }
  }
  return knots;
}

std::string join_family_tags(const TorusKnot& k) {
  std::string joined;
  for (const JvcFamily tag : jvc_family_tags(k)) {
    if (!joined.empty()) joined += ';';
    joined += to_string(tag);
  }
  return joined;
}

ScanRow make_scan_row(const TorusKnot& k) {
  const KnotReport r = knot_report(k);
  return ScanRow{k.p(),       k.q(),   r.b1,
                 r.p0,        r.b1,    r.euler,
                 r.sigma,     r.two_upsilon,
                 checked::abs(r.two_upsilon - r.sigma) / 2,
                 r.is_jvc,    join_family_tags(k)};
}

std::vector<ScanRow> compute_scan(const ScanConfig& cfg) {
  const std::vector<TorusKnot> knots = scan_knots(cfg);
  if (!cfg.parallel) {
    std::vector<ScanRow> rows;
    rows.reserve(knots.size());
    for (const TorusKnot& k : knots) rows.push_back(make_scan_row(k));
    return rows;
  }

  std::vector<ScanRow> rows(knots.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const unsigned workers = std::max(2u, std::thread::hardware_concurrency());
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < knots.size(); i = next++) {
            rows[i] = make_scan_row(knots[i]);
          }
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = knots.size();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << kScanHeader << '\n';
  for (const ScanRow& r : rows) {
    out << r.p << ',' << r.q << ',' << r.n << ',' << r.p0 << ',' << r.b1 << ',' << r.e << ','
        << r.sigma << ',' << r.two_upsilon << ',' << r.gamma4_lb << ','
        << (r.jvc ? "true" : "false") << ',' << r.family_tags << '\n';
  }
  return out.str();
}

std::string format_json(const std::vector<ScanRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const ScanRow& r : rows) {
    doc.push_back({{"p", r.p},
                   {"q", r.q},
                   {"n", r.n},
                   {"p0", r.p0},
                   {"b1", r.b1},
                   {"e", r.e},
                   {"sigma", r.sigma},
                   {"two_upsilon", r.two_upsilon},
                   {"gamma4_lb", r.gamma4_lb},
                   {"jvc", r.jvc},
                   {"family_tags", r.family_tags}});
  }
  return doc.dump(2) + "\n";
}

std::vector<ScanRow> parse_csv(std::string_view text) {
  std::vector<ScanRow> rows;
  std::size_t line_no = 0;
  bool saw_header = false;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != kScanHeader) {
        throw Error(ErrorCode::kInvalidConfig, "unexpected CSV header '" + std::string(line) + "'");
      }
      saw_header = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 11) {
      throw Error(ErrorCode::kInvalidConfig,
                  "line " + std::to_string(line_no) + ": expected 11 fields");
    }
    if (f[9] != "true" && f[9] != "false") {
      throw Error(ErrorCode::kInvalidConfig, "line " + std::to_string(line_no) + ": bad jvc flag");
    }
    rows.push_back(ScanRow{parse_int(f[0], line_no), parse_int(f[1], line_no),
                           parse_int(f[2], line_no), parse_int(f[3], line_no),
                           parse_int(f[4], line_no), parse_int(f[5], line_no),
                           parse_int(f[6], line_no), parse_int(f[7], line_no),
                           parse_int(f[8], line_no), f[9] == "true", std::string(f[10])});
  }
  if (!saw_header) throw Error(ErrorCode::kInvalidConfig, "missing CSV header");
  return rows;
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write to " + path.string() + " failed");
}

std::size_t run_scan(const ScanConfig& cfg) {
  const std::vector<ScanRow> rows = compute_scan(cfg);
  write_file(cfg.output_path, cfg.format == ScanFormat::kCsv ? format_csv(rows) : format_json(rows));
  return rows.size();
}

}  // namespace pinchkit
