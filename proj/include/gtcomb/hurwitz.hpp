#pragma once

// Hurwitz numbers N_{d,g}(alpha): genus-g degree-d covers of P^1 with
// ramification profile alpha over infinity and
//
//     r = d + |alpha| + 2g - 2
//
// further fixed simple branch points, each cover weighted by 1/|Aut|.
// Evaluated by the cut-and-join recursion in r (move the last simple branch
// point into the profile):
//
//   N_{d,g}(alpha) =
//     CUT        sum_{i<j} (i+j)(alpha_{i+j}+1) N_{d,g}(a - e_i - e_j + e_{i+j})
//                + sum_i    i (alpha_{2i}+1)     N_{d,g}(a - 2e_i + e_{2i})
//   JOIN-CONN   + sum_{(i,j)} (1/2) i j w_{ij}   N_{d,g-1}(a + e_i + e_j - e_{i+j})
//   JOIN-SPLIT  + sum_{(i,j)} (1/2) i j sum C(r-1, r_1)
//                    a'_{1,i} N_{d_1,g_1}(a'_1) a'_{2,j} N_{d_2,g_2}(a'_2)
//
// with w_{ij} = (alpha_i+1)(alpha_j+1) for i != j and (alpha_i+2)(alpha_i+1)
// for i = j; join sums need alpha_{i+j} >= 1, cut sums alpha_i, alpha_j >= 1
// (>= 2 when i = j); the split sum runs over ordered pairs (i, j), splittings
// a'_1 + a'_2 = a + e_i + e_j - e_{i+j} and g_1 + g_2 = g, with d_k = I(a'_k)
// and r_k = d_k + |a'_k| + 2 g_k - 2 (r_1 + r_2 = r - 1 automatically).
// Base: r = 0 forces the trivial cover, N_{1,0}(e_1) = 1.
//
// Independent oracle: the classical monodromy dictionary.  N_{d,g}(alpha) is
// 1/d! times the number of tuples (sigma, tau_1, ..., tau_r) with sigma of
// cycle type alpha, each tau_t a transposition, tau_r ... tau_1 sigma = id,
// and the whole tuple generating a transitive subgroup of S_d.  The test
// suite checks the two agree on the nose for every admissible key with
// d <= 3 before anything wider relies on either convention.

#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gtcomb/mult_index.hpp"
#include "gtcomb/rational.hpp"

namespace gtcomb {

struct HurwitzKey {
  int d = 0;
  int g = 0;
  MultIndex alpha;

  bool operator==(const HurwitzKey&) const = default;
  auto operator<=>(const HurwitzKey&) const = default;
};

// r = d + |alpha| + 2g - 2.
int hurwitz_branch_count(const HurwitzKey& key);

class HurwitzTable {
 public:
  // Total function: keys with d < 1, g < 0, or I(alpha) != d return 0.
  // Memoized; safe to call concurrently.
  Rat number(const HurwitzKey& key);

  // The three summands of the recursion at one key (zero struct at r = 0).
  struct Parts {
    Rat cut;
    Rat join_connected;
    Rat join_split;
    Rat total() const { return cut + join_connected + join_split; }
  };
  Parts parts(const HurwitzKey& key);

  // Deepest recursion observed so far; bounded by r + 1 for a fresh table.
  int max_depth() const { return max_depth_.load(); }

 private:
  std::map<HurwitzKey, Rat> memo_;
  std::mutex mutex_;
  std::atomic<int> depth_{0};
  std::atomic<int> max_depth_{0};
};

// Coefficient N_{d,g}(alpha) / r! of the exponential generating function in
// the branch-point variable.
Rat generating_coefficient(HurwitzTable& table, const HurwitzKey& key);

struct OracleLimits {
  int max_d = 6;
  int max_r = 8;
};
// Absolute ceilings the limits themselves may not exceed.
inline constexpr int kOracleHardMaxD = 8;
inline constexpr int kOracleHardMaxR = 12;

// Direct count of transitive transposition factorizations, divided by d!.
// One permutation per cycle type is enumerated explicitly (the class size is
// computed combinatorially); the factorization search is a depth-first walk
// with the distance-to-identity prune.  Throws limit_error when d or r
// exceeds the given limits; std::invalid_argument for inadmissible keys or
// limits beyond the hard caps.
Rat monodromy_oracle(const HurwitzKey& key, const OracleLimits& limits = {});

struct CutJoinRow {
  HurwitzKey key;
  int r = 0;
  Rat value;
  Rat oracle;
  HurwitzTable::Parts parts;
  bool ok = false;
};

struct CutJoinReport {
  std::vector<CutJoinRow> rows;
  bool all_ok = true;
  std::optional<std::string> first_mismatch;
};

// Recursion vs. oracle for every admissible key with d <= dmax, g <= gmax,
// r <= limits.max_r, with the cut/join decomposition itemized per key.
CutJoinReport verify_cut_and_join(HurwitzTable& table, int dmax, int gmax,
                                  const OracleLimits& limits = {});

}  // namespace gtcomb
