// Acceptance suite: each numbered criterion prints exactly one [PASS]/[FAIL]
// line with its runtime and budget, and the process exits nonzero if any
// criterion fails its check or its budget.  All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gtcomb/caporaso_harris.hpp"
#include "gtcomb/divisor.hpp"
#include "gtcomb/hurwitz.hpp"
#include "gtcomb/mult_index.hpp"
#include "gtcomb/rel_invariants.hpp"
#include "gtcomb/verify.hpp"

using namespace gtcomb;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;  // shown only on failure
};

Outcome criterion_rational_counts() {
  CaporasoHarrisTable table;
  const Int expected[] = {1, 1, 12, 620, 87304};
  for (int d = 1; d <= 5; ++d) {
    const Int oracle = wdvv_oracle(d);
    const Int counted = table.connected(rational_diagonal_key(d));
    if (oracle != expected[d - 1] || counted != oracle) {
      std::ostringstream msg;
      msg << "d=" << d << ": table " << counted << ", oracle " << oracle
          << ", expected " << expected[d - 1];
      return {false, msg.str()};
    }
  }
  return {true, {}};
}

Outcome criterion_cut_and_join() {
  HurwitzTable table;
  CutJoinReport report = verify_cut_and_join(table, 5, 2, OracleLimits{5, 8});
  if (!report.all_ok)
    return {false, report.first_mismatch.value_or("unreported mismatch")};
  if (report.rows.empty()) return {false, "sweep produced no keys"};
  std::ostringstream msg;
  msg << report.rows.size() << " keys";
  return {true, msg.str()};
}

Outcome criterion_anchors() {
  HurwitzTable hw;
  if (hw.number(HurwitzKey{1, 0, MultIndex::unit(1)}) != 1)
    return {false, "trivial cover is not 1"};

  for (int d = 1; d <= 10; ++d)
    if (p1_two_point(0, d, ContactTuple{d}, ContactTuple{d}) != Rat(1, d)) {
      std::ostringstream msg;
      msg << "two-point value at d=" << d << " is not 1/" << d;
      return {false, msg.str()};
    }

  const DivisorBasis& line = DivisorBasis::line();
  const HomologyWord L = make_word(line, {"L"});
  const HomologyWord pt = make_word(line, {"pt"});
  for (int b = 1; b <= 10; ++b) {
    TensorSum v =
        fn_no_constraint(FnDegree{1, 0, b}, 0, ContactTuple{b}, ContactTuple{b});
    const bool shape = v.size() == 2 && v[0].coeff == Rat(1, b) &&
                       v[1].coeff == Rat(1, b) &&
                       ((v[0].s0_side == L && v[0].sinf_side == pt &&
                         v[1].s0_side == pt && v[1].sinf_side == L) ||
                        (v[0].s0_side == pt && v[0].sinf_side == L &&
                         v[1].s0_side == L && v[1].sinf_side == pt));
    if (!shape) {
      std::ostringstream msg;
      msg << "fiber value at b=" << b << " is not the diagonal over b";
      return {false, msg.str()};
    }
  }
  return {true, {}};
}

Outcome criterion_split_identity() {
  CaporasoHarrisTable table;
  const std::vector<CHKey> keys = admissible_ch_keys(4);
  if (keys.empty()) return {false, "no admissible keys"};
  for (const CHKey& key : keys) {
    CHSplitReport report = verify_ch_split(table, key);
    if (!report.ok)
      return {false, report.first_mismatch.value_or("unreported mismatch")};
  }
  std::ostringstream msg;
  msg << keys.size() << " keys";
  return {true, msg.str()};
}

Outcome criterion_exp_gw() {
  SuiteReport report = verify_exp_gw(6);
  if (!report.ok())
    return {false, report.first_failure.value_or("no checks ran")};
  return {true, {}};
}

Outcome criterion_property_suites() {
  for (SuiteReport report :
       {verify_pairing(100), verify_round_trip(100), verify_shuffle_counts(8),
        verify_dimension_vanishing(6, 3)}) {
    if (!report.ok())
      return {false, report.name + ": " +
                         report.first_failure.value_or("no checks ran")};
  }
  return {true, {}};
}

struct Criterion {
  const char* label;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1. rational plane curve counts vs quadratic recursion, d <= 5", 10.0,
       criterion_rational_counts},
      {"2. cut-and-join vs monodromy oracle, d <= 5, g <= 2, r <= 8", 180.0,
       criterion_cut_and_join},
      {"3. anchor values: trivial cover, two-point 1/d, fiber diagonal", 1.0,
       criterion_anchors},
      {"4. degeneration identity reassembled for every key, d <= 4", 30.0,
       criterion_split_identity},
      {"5. disconnected series is exp of connected, degree <= 6", 5.0,
       criterion_exp_gw},
      {"6. property suites: pairing, round trip, shuffles, vanishing", 30.0,
       criterion_property_suites},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& ex) {
      outcome = {false, std::string("exception: ") + ex.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = elapsed <= c.budget_seconds;
    const bool pass = outcome.ok && in_budget;
    if (!pass) ++failures;

    std::printf("[%s] %-62s %8.3fs (budget %.0fs)", pass ? "PASS" : "FAIL",
                c.label, elapsed, c.budget_seconds);
    if (!outcome.ok)
      std::printf("  -- %s", outcome.detail.c_str());
    else if (!in_budget)
      std::printf("  -- over budget");
    else if (!outcome.detail.empty())
      std::printf("  [%s]", outcome.detail.c_str());
    std::printf("\n");
  }

  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
