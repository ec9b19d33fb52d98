// pinchkit: pinch surfaces, refined genus bounds and (e, b) geography of
// torus knots.

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pinchkit/bounds.hpp"
#include "pinchkit/error.hpp"
#include "pinchkit/geography.hpp"
#include "pinchkit/invariants.hpp"
#include "pinchkit/knot_params.hpp"
#include "pinchkit/pinch.hpp"
#include "pinchkit/scan.hpp"
#include "pinchkit/svg.hpp"
#include "pinchkit/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;

using namespace pinchkit;

// Which part of the index assumption an input error violates.
std::string assumption_clause(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositive: return "p and q must be positive";
    case ErrorCode::kNotCoprime:
    case ErrorCode::kBothEven: return "p and q must be relatively prime";
    case ErrorCode::kOverflow: return "p*q must not exceed 2^62";
    default: return "invalid input";
  }
}

std::string signed_str(int sign) { return sign > 0 ? "+" : "-"; }

void print_steps(std::ostream& out, const PinchSurface& surface) {
  out << "  step  source      target      t      u      sign  step_euler\n";
  int idx = static_cast<int>(surface.steps.size());
  for (const PinchStep& s : surface.steps) {
    out << "  " << std::left << std::setw(6) << idx-- << std::setw(12) << to_string(s.source)
        << std::setw(12) << to_string(s.target) << std::setw(7) << s.t << std::setw(7) << s.u
        << std::setw(6) << signed_str(s.sign) << s.step_euler << '\n';
  }
}

std::string tags_text(const TorusKnot& k) {
  const std::string joined = join_family_tags(k);
  return joined.empty() ? "-" : joined;
}

int cmd_invariants(std::int64_t p, std::int64_t q, bool as_json) {
  const TorusKnot k = normalize(p, q);
  const KnotReport r = knot_report(k);
  const RefinedGenus at_pinch = gamma4e_at_pinch(k);
  const std::int64_t g4_lb = gamma4_lower_bound(k);

  if (as_json) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const PinchStep& s : r.surface.steps) {
      steps.push_back({{"source", {s.source.p(), s.source.q()}},
                       {"target", {s.target.p(), s.target.q()}},
                       {"t", s.t},
                       {"u", s.u},
                       {"sign", s.sign},
                       {"step_euler", s.step_euler}});
    }
    const nlohmann::ordered_json doc = {{"p", k.p()},
                                        {"q", k.q()},
                                        {"n", r.b1},
                                        {"p0", r.p0},
                                        {"steps", steps},
                                        {"b1", r.b1},
                                        {"e", r.euler},
                                        {"sigma", r.sigma},
                                        {"two_upsilon", r.two_upsilon},
                                        {"gamma4_lb", g4_lb},
                                        {"gamma4e_at_pinch", {{"e", at_pinch.euler}, {"gamma", at_pinch.gamma}}},
                                        {"jvc", r.is_jvc},
                                        {"family_tags", join_family_tags(k)},
                                        {"wedge_apex", {r.euler, r.b1}}};
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "knot: " << to_string(k) << "  (p = " << k.p() << ", q = " << k.q() << ")\n";
  std::cout << "pinches: n = " << r.b1 << ", p0 = " << r.p0 << '\n';
  if (!r.surface.steps.empty()) print_steps(std::cout, r.surface);
  std::cout << std::left;
  std::cout << std::setw(22) << "b1(F)" << r.b1 << '\n';
  std::cout << std::setw(22) << "e(F)" << r.euler << '\n';
  std::cout << std::setw(22) << "sigma" << r.sigma << '\n';
  std::cout << std::setw(22) << "2*upsilon" << r.two_upsilon << '\n';
  std::cout << std::setw(22) << "upsilon" << r.two_upsilon / 2 << '\n';
  std::cout << std::setw(22) << "gamma4 lower bound" << g4_lb << '\n';
  std::cout << std::setw(22) << "gamma4^e at e(F)" << at_pinch.gamma << "  (e = " << at_pinch.euler
            << ")\n";
  std::cout << std::setw(22) << "jvc" << (r.is_jvc ? "true" : "false") << '\n';
  std::cout << std::setw(22) << "family tags" << tags_text(k) << '\n';
  std::cout << std::setw(22) << "wedge apex" << "(" << r.euler << ", " << r.b1 << ")\n";
  return kExitOk;
}

int cmd_pinch(std::int64_t p, std::int64_t q) {
  const TorusKnot k = normalize(p, q);
  const PinchSurface surface = pinch_sequence(k);
  std::cout << to_string(k);
  for (const PinchStep& s : surface.steps) {
    std::cout << " -(" << signed_str(s.sign) << ")-> " << to_string(s.target);
  }
  std::cout << '\n';
  std::cout << "n = " << surface.b1() << ", p0 = " << surface.p0 << ", e = " << surface.euler << '\n';
  if (!surface.steps.empty()) print_steps(std::cout, surface);
  return kExitOk;
}

int cmd_scan(const ScanConfig& cfg) {
  const std::size_t rows = run_scan(cfg);
  std::cerr << "wrote " << rows << " rows to " << cfg.output_path.string() << '\n';
  return kExitOk;
}

int cmd_geography(std::int64_t p, std::int64_t q, std::int64_t e_min, std::int64_t e_max,
                  std::int64_t b_max, const std::string& svg_path) {
  const TorusKnot k = normalize(p, q);
  const LatticeBox box(e_min, e_max, 0, b_max);
  if (!svg_path.empty()) write_file(svg_path, render_geography_svg(k, box));
  std::cout << format_geography_listing(k, box);
  return kExitOk;
}

int cmd_verify(const std::string& suite) {
  const SuiteReport report = run_suite(suite);
  std::cout << report.format();
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pinchkit: pinch surfaces, refined non-orientable genus bounds and geography of torus knots"};
  app.require_subcommand(1);

  std::int64_t p = 0, q = 0;
  bool as_json = false;
  auto* inv = app.add_subcommand("invariants", "Pinch sequence, signature, upsilon and bounds of T(P,Q)");
  inv->add_option("P", p)->required();
  inv->add_option("Q", q)->required();
  inv->add_flag("--json", as_json, "Emit JSON instead of aligned text");

  auto* pinch = app.add_subcommand("pinch", "Print the pinch sequence of T(P,Q)");
  pinch->add_option("P", p)->required();
  pinch->add_option("Q", q)->required();

  ScanConfig cfg;
  std::string format = "csv";
  std::string out_path;
  auto* scan = app.add_subcommand("scan", "Tabulate invariants of all torus knots with pq <= N");
  scan->add_option("--pq-cap", cfg.pq_cap, "Upper bound on p*q")->required();
  scan->add_option("--p-max", cfg.p_max, "Upper bound on p (default: unbounded)");
  scan->add_option("--q-max", cfg.q_max, "Upper bound on q (default: unbounded)");
  scan->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--out", out_path, "Output file")->required();
  scan->add_flag("--parallel", cfg.parallel, "Compute rows on a worker pool");

  std::int64_t e_min = 0, e_max = 0, b_max = 0;
  std::string svg_path;
  auto* geo = app.add_subcommand("geography", "Realizable (e, b) pairs and an SVG diagram");
  geo->add_option("P", p)->required();
  geo->add_option("Q", q)->required();
  geo->add_option("--emin", e_min, "Smallest normal Euler number shown")->required();
  geo->add_option("--emax", e_max, "Largest normal Euler number shown")->required();
  geo->add_option("--bmax", b_max, "Largest first Betti number shown")->required();
  geo->add_option("--svg", svg_path, "Write the diagram here");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run an oracle suite");
  verify->add_option("SUITE", suite, "linking, signature, families or geography")
      ->required()
      ->check(CLI::IsMember({"linking", "signature", "families", "geography"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (*inv) return cmd_invariants(p, q, as_json);
    if (*pinch) return cmd_pinch(p, q);
    if (*scan) {
      cfg.format = format == "json" ? ScanFormat::kJson : ScanFormat::kCsv;
      cfg.output_path = out_path;
      return cmd_scan(cfg);
    }
    if (*geo) return cmd_geography(p, q, e_min, e_max, b_max, svg_path);
    if (*verify) return cmd_verify(suite);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kNonPositive:
      case ErrorCode::kNotCoprime:
      case ErrorCode::kBothEven:
      case ErrorCode::kOverflow:
        std::cerr << "error: " << e.what() << " [" << assumption_clause(e.code()) << "]\n";
        return kExitInvalidInput;
      case ErrorCode::kInvalidBox:
      case ErrorCode::kInvalidConfig:
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
      default:
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}
