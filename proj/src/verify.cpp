#include "pinchkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pinchkit/bounds.hpp"
#include "pinchkit/geography.hpp"
#include "pinchkit/invariants.hpp"
#include "pinchkit/knot_params.hpp"
#include "pinchkit/oracles.hpp"
#include "pinchkit/pinch.hpp"

namespace pinchkit {

namespace {

std::ostringstream classic_stream() {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  return out;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string SuiteReport::format() const {
  auto out = classic_stream();
  for (const CheckResult& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << suite << ": " << c.name;
    if (!c.detail.empty()) out << " -- " << c.detail;
    out << '\n';
  }
  out << suite << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks.size() << " checks)\n";
  return out.str();
}

std::vector<std::pair<std::int64_t, std::int64_t>> linking_test_pairs() {
  std::set<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t p = 2; p <= 10; ++p) {
    for (std::int64_t q = 2; p * q <= 20; ++q) {
      if (ext_gcd(p, q).gcd != 1) continue;
      pairs.insert({p, q});
      for (const PinchStep& step : pinch_sequence(normalize(p, q)).steps) {
        pairs.insert({step.target.p(), step.target.q()});
      }
    }
  }
  return {pairs.begin(), pairs.end()};
}

SuiteReport verify_linking(int samples) {
  SuiteReport report{"linking", {}};
  double max_error = 0.0;
  for (const auto& [p, q] : linking_test_pairs()) {
    const double lk = oracles::pushoff_linking(p, q, samples);
    const double lk2 = oracles::pushoff_linking(p, q, 2 * samples);
    const double err = std::abs(lk - static_cast<double>(p * q));
    const double err2 = std::abs(lk2 - static_cast<double>(p * q));
    max_error = std::max(max_error, err);
    auto detail = classic_stream();
    detail.precision(3);
    detail << "lk=" << std::fixed << lk << std::scientific << " |err|=" << err
           << " |err|@" << 2 * samples << "=" << err2 << " tol=" << kLinkingTolerance;
    const bool converging = err2 < err || err2 <= kLinkingRoundoffFloor;
    report.checks.push_back({"(" + std::to_string(p) + "," + std::to_string(q) + ") vs pq=" +
                                 std::to_string(p * q),
                             err < kLinkingTolerance && converging, detail.str()});
  }

  // Per-step Euler numbers of small pinch sequences, recovered from two
  // quadratures each.
  for (const TorusKnot& k : normalized_knots(20, false)) {
    for (const PinchStep& step : pinch_sequence(k).steps) {
      const bool ok = oracles::verify_step_euler(step, samples);
      report.checks.push_back({"step " + to_string(step.source) + " -> " + to_string(step.target),
                               ok, "step_euler=" + std::to_string(step.step_euler)});
    }
  }
  auto summary = classic_stream();
  summary.precision(3);
  summary << std::scientific << "max |err|=" << max_error << " at samples=" << samples;
  report.checks.push_back({"max error", max_error < kLinkingTolerance, summary.str()});
  return report;
}

SuiteReport verify_signature(std::int64_t max_index) {
  SuiteReport report{"signature", {}};
  for (std::int64_t p = 2; p <= max_index; ++p) {
    for (std::int64_t q = 3; q <= max_index; q += 2) {
      if (ext_gcd(p, q).gcd != 1 || (p % 2 == 1 && p < q)) continue;
      const TorusKnot k = normalize(p, q);
      const std::int64_t lattice = signature(k);
      const std::int64_t seifert = oracles::seifert_signature_oracle(k);
      report.checks.push_back({to_string(k), lattice == seifert,
                               "lattice=" + std::to_string(lattice) +
                                   " seifert=" + std::to_string(seifert)});
    }
  }
  return report;
}

SuiteReport verify_families(std::int64_t pq_cap) {
  SuiteReport report{"families", {}};
  std::int64_t checked = 0;
  std::int64_t mismatches = 0;
  std::string first_mismatch;
  for (const TorusKnot& k : normalized_knots(pq_cap, false)) {
    const auto tags = jvc_family_tags(k);
    if (tags.empty()) continue;
    const bool jvc = is_jvc(k);
    for (const JvcFamily tag : tags) {
      ++checked;
      if (family_predicts_jvc(tag, k) != jvc) {
        ++mismatches;
        if (first_mismatch.empty()) {
          first_mismatch = to_string(k) + " tagged " + std::string(to_string(tag));
        }
      }
    }
  }
  report.checks.push_back(
      {"family predictions, pq <= " + std::to_string(pq_cap), mismatches == 0,
       std::to_string(checked) + " tagged cases, " + std::to_string(mismatches) + " mismatches" +
           (first_mismatch.empty() ? "" : ", first: " + first_mismatch)});
  return report;
}

SuiteReport verify_geography(std::int64_t pq_cap) {
  SuiteReport report{"geography", {}};

  std::int64_t jvc_count = 0;
  std::int64_t equality_failures = 0;
  std::int64_t containment_failures = 0;
  for (const TorusKnot& k : normalized_knots(pq_cap, true)) {
    const Wedge wf = pinch_wedge(k);
    const LatticeBox box(wf.apex_e() - 40, wf.apex_e() + 40, 0, 20);
    const auto inner = enumerate_wedge(wf, box);
    const auto outer = outer_bound_set(k, box);
    // W_F inside W_sigma and W_upsilon.
    const bool contained = std::all_of(inner.begin(), inner.end(), [&](const LatticePoint& pt) {
      return std::find(outer.begin(), outer.end(), pt) != outer.end();
    });
    if (!contained) ++containment_failures;
    if (is_jvc(k)) {
      ++jvc_count;
      if (inner != outer) ++equality_failures;
    }
  }
  report.checks.push_back({"W_F within W_sigma and W_upsilon, pq <= " + std::to_string(pq_cap),
                           containment_failures == 0,
                           std::to_string(containment_failures) + " failures"});
  report.checks.push_back({"JVC knots: W_sigma and W_upsilon cut out exactly W_F",
                           equality_failures == 0 && jvc_count > 0,
                           std::to_string(jvc_count) + " JVC knots, " +
                               std::to_string(equality_failures) + " failures"});

  std::mt19937_64 rng(20240229);
  std::int64_t closure_failures = 0;
  constexpr int kTrials = 50;
  for (int trial = 0; trial < kTrials; ++trial) {
    std::uniform_int_distribution<std::int64_t> b_dist(-5, 5);
    std::uniform_int_distribution<std::int64_t> e_dist(-30, 30);
    const std::int64_t apex_b = b_dist(rng);
    // Round e to the residue 2b mod 4.
    std::int64_t apex_e = 2 * e_dist(rng);
    if ((((apex_e - 2 * apex_b) % 4) + 4) % 4 != 0) apex_e += 2;
    std::uniform_int_distribution<std::int64_t> offset(-20, 20);
    std::uniform_int_distribution<std::int64_t> width_e(0, 40);
    std::uniform_int_distribution<std::int64_t> width_b(0, 20);
    const std::int64_t e_min = apex_e + offset(rng);
    const std::int64_t b_min = apex_b + offset(rng) / 4;
    const LatticeBox box(e_min, e_min + width_e(rng), b_min, b_min + width_b(rng));
    if (wedge_closure_from_apex({apex_e, apex_b}, box) != enumerate_wedge(Wedge(apex_e, apex_b), box)) {
      ++closure_failures;
    }
  }
  report.checks.push_back({"closure from apex equals wedge enumeration",
                           closure_failures == 0,
                           std::to_string(kTrials) + " random apexes, " +
                               std::to_string(closure_failures) + " failures"});
  return report;
}

SuiteReport run_suite(std::string_view name) {
  if (name == "linking") return verify_linking();
  if (name == "signature") return verify_signature();
  if (name == "families") return verify_families();
  if (name == "geography") return verify_geography();
  throw std::invalid_argument("unknown verify suite '" + std::string(name) + "'");
}

}  // namespace pinchkit
