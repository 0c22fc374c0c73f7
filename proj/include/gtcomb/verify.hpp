#pragma once

// Self-contained consistency suites: each one checks a structural identity
// of the library against an independent computation and reports how many
// checks ran and which one failed first.  They back both the `verify` CLI
// subcommand and the acceptance tests.

#include <functional>
#include <optional>
#include <string>

#include "gtcomb/gt_series.hpp"

namespace gtcomb {

struct SuiteReport {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::optional<std::string> first_failure;

  bool ok() const { return checks > 0 && failures == 0; }
  // Tallies one check; the description is only rendered on failure.
  void count(bool pass, const std::function<std::string()>& describe);
};

// The connected series of (P^1, {0, inf}): one genus-0 cover z -> z^d per
// degree d <= max_degree, fully ramified over both points, coefficient 1/d
// from the two-point table.
GTSeries exp_gw_connected(int max_degree);

// The disconnected series of (P^1, {0, inf}) assembled directly from
// multisets of connected covers equals exp of the connected series, termwise,
// through total degree max_degree.
SuiteReport verify_exp_gw(int max_degree = 6);

// Randomized properties of the star pairing: symmetry, vanishing for
// mismatched tuples or non-complementary insertions, invariance under
// simultaneous reordering, chi bookkeeping, bilinearity of series_star, and
// the resolution identity of the Kunneth diagonal (also for a rescaled
// pairing).  At least `trials` random instances.
SuiteReport verify_pairing(int trials = 100, unsigned long seed = 20260819);

// log(exp(G)) == G and exp(log(H)) == H for random connected series G with
// every key of positive total degree, exactly at the truncation order.
SuiteReport verify_round_trip(int trials = 100, unsigned long seed = 20260819);

// enumerate_shuffles(k1, k2) yields exactly C(k1+k2, k1) distinct
// order-preserving bijections, for all 0 <= k1, k2 <= kmax.
SuiteReport verify_shuffle_counts(int kmax = 8);

// The closed-form tables vanish exactly where the dimension counts say they
// must: p1_two_point is nonzero iff the relative dimension is 0,
// p1_branch_point iff it is 1, and nonzero F_n values satisfy the
// fn_dimension_allows gate.  Sweeps d <= dmax, g <= gmax.
SuiteReport verify_dimension_vanishing(int dmax = 6, int gmax = 3);

}  // namespace gtcomb
