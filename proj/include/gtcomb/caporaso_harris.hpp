#pragma once

// Counts of reduced degree-d plane curves with delta nodes and prescribed
// tangency to a fixed line L: alpha records contact orders at fixed points of
// L, beta contact orders at unconstrained points, subject to
// I(alpha) + I(beta) = d.  The curves pass through
//
//     r = d(d+1)/2 - delta + |beta|
//
// general points off L.  "Reduced" means the curve may break into several
// irreducible components (a three-nodal quartic through 11 points is either
// one of the 620 rational quartics or one of the 55 smooth-cubic-plus-line
// pairs, so N^{4,3}(0, 4e_1) = 675); this matches the normalization
// beta! N = GT, since the GT-side invariant does not see connectedness
// either.  The connected counts are recovered from the table by
// inclusion-exclusion over component splittings -- see connected() below.
// N^{d,delta}(alpha, beta) satisfies the recursion
//
//     N^{d,delta}(alpha, beta)
//       = sum_{k : beta_k > 0} k N^{d,delta}(alpha + e_k, beta - e_k)
//       + sum C(alpha, alpha') C(beta', beta) I^{beta' - beta}
//             N^{d-1,delta'}(alpha', beta'),
//
// the second sum over alpha' <= alpha and beta' >= beta with
// I(alpha') + I(beta') = d - 1 and delta' = delta + |beta' - beta| - (d - 1),
// with base case N^{1,0}(e_1, 0) = 1 and every other key with d = 1 and
// beta = 0 equal to 0.  The recursion comes from degenerating one point
// constraint onto the line: a curve either drops a moving contact to a fixed
// one on the same curve (first sum), or splits off L itself, leaving a
// degree d-1 curve glued to a chain of fiber components (second sum).
//
// Two independent cross-checks live here:
//   * wdvv_oracle(d): the genus-zero counts N_d of rational curves through
//     3d - 1 points from the quadratic WDVV recursion; the connected part of
//     the table's diagonal, connected(d, (d-1)(d-2)/2, 0, d e_1), must
//     reproduce them.
//   * verify_ch_split: reassembles the degeneration identity configuration by
//     configuration, with every multiplicity (gluing factors <s>, tube
//     automorphisms 1/b pulled from the F_1 tables, marked-point orderings)
//     multiplied out literally, and compares against beta! N^{d,delta}.

#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gtcomb/mult_index.hpp"
#include "gtcomb/rational.hpp"

namespace gtcomb {

struct CHKey {
  int d = 0;
  int delta = 0;
  MultIndex alpha;
  MultIndex beta;

  bool operator==(const CHKey&) const = default;
  auto operator<=>(const CHKey&) const = default;
};

// r = d(d+1)/2 - delta + |beta|: the number of general point constraints.
int ch_point_count(const CHKey& key);

// Euler characteristic 2 delta - d(d-3) of the (doubled) curve: delta nodes
// smoothed out of a degree-d plane curve.
int geometric_euler(int d, int delta);

class CaporasoHarrisTable {
 public:
  // Total function: keys with d < 1, I(alpha) + I(beta) != d, or delta
  // outside [0, d(d-1)/2] return 0.  Memoized; safe to call concurrently.
  Int number(const CHKey& key);

  // The connected refinement of number(): curves as above that are also
  // irreducible.  Peeling off the component through a distinguished point
  // gives
  //
  //   N(K) = sum over splittings K = K1 + K2 of
  //            C(r-1, r1-1) C(alpha, alpha1) N_conn(K1) N(K2),
  //
  // where the split keys share out alpha, beta, and the nodes not accounted
  // for by the d1*d2 intersections of the two sides, and K1 ranges over the
  // anchor component (d1 = d gives the connected term).  Solving for
  // N_conn(K) and recursing downward in degree inverts the relation exactly
  // -- the table-level shadow of taking log of a disconnected series.  On
  // the rational diagonal this reproduces the WDVV counts: 1, 1, 12, 620,
  // 87304 for d = 1..5.
  Int connected(const CHKey& key);

  // beta! N^{d,delta}(alpha, beta) with delta read off from the Euler
  // characteristic chi = 2 delta - d(d-3); 0 if no admissible delta exists.
  Rat gt_normalized(int chi, int d, const MultIndex& alpha,
                    const MultIndex& beta);

  // Deepest recursion observed so far (structural termination check).
  int max_depth() const { return max_depth_.load(); }

 private:
  Int compute(const CHKey& key);

  Int compute_connected(const CHKey& key);

  std::map<CHKey, Int> memo_;
  std::map<CHKey, Int> conn_memo_;
  std::mutex mutex_;
  std::atomic<int> depth_{0};
  std::atomic<int> max_depth_{0};
};

// The genus-zero key (delta = (d-1)(d-2)/2, alpha = 0, beta = d e_1):
// curves through 3d - 1 general points meeting L at d free transverse
// points.  connected() on it yields the rational curve counts N_d.
CHKey rational_diagonal_key(int d);

// N_d for rational plane curves through 3d - 1 general points, via the
// quadratic recursion obtained from WDVV/associativity:
//   N_1 = 1,
//   N_d = sum_{d1+d2=d} N_{d1} N_{d2} d1^2 d2 (d2 C(3d-4, 3d1-2)
//                                              - d1 C(3d-4, 3d1-1)).
Int wdvv_oracle(int d);

struct CHSplitRow {
  std::string kind;      // "fiber" or "section"
  CHKey sub;             // the table key the configuration reduces to
  Rat assembled;         // configuration count with all factors multiplied out
  Rat recursion_term;    // beta! times the recursion's corresponding term
  bool ok = false;
};

struct CHSplitReport {
  CHKey key;
  Rat lhs;  // beta! N^{d,delta}(alpha, beta)
  Rat rhs;  // sum of assembled configuration contributions
  bool ok = false;
  std::vector<CHSplitRow> rows;
  std::optional<std::string> first_mismatch;
};

// Reassembles the right-hand side of the degeneration identity for one key
// from explicit configurations (fiber drops and the degree-drop section),
// weighting each by gluing multiplicity, tube factors from the F_1 tables,
// and marked-point ordering counts.  The identity presumes at least one point
// constraint to degenerate, so keys with d = 1 and beta = 0 are rejected with
// std::invalid_argument.
CHSplitReport verify_ch_split(CaporasoHarrisTable& table, const CHKey& key);

// Every admissible key with the given degree bound (excluding the base keys
// d = 1, beta = 0), in deterministic order.
std::vector<CHKey> admissible_ch_keys(int dmax);

}  // namespace gtcomb
