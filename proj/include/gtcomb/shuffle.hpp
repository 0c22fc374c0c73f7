#pragma once

// Rules of assignment: the order-preserving bijections
//
//   {1} x {1..k1}  disjoint-union  {2} x {1..k2}  -->  {1..k1+k2}
//
// i.e. shuffles of two ordered blocks.  These count the ways insertions of two
// factors interleave when disconnected invariants are assembled from connected
// ones; there are exactly C(k1+k2, k1) of them.

#include <utility>
#include <vector>

#include "gtcomb/rational.hpp"

namespace gtcomb {

struct RuleOfAssignment {
  int k1 = 0;
  int k2 = 0;
  // image[t] = (block, index) occupying target slot t+1, block in {1,2},
  // index 1-based within its block.  Within each block the indices appear in
  // increasing order (order preservation), and every source appears exactly
  // once (bijectivity).
  std::vector<std::pair<int, int>> image;

  bool operator==(const RuleOfAssignment&) const = default;
};

// All shuffles of blocks of sizes k1 and k2, ordered by the (lexicographically
// increasing) set of target slots block 1 occupies.  Throws limit_error when
// k1 + k2 > max_total.
std::vector<RuleOfAssignment> enumerate_shuffles(int k1, int k2,
                                                 int max_total = 20);

}  // namespace gtcomb
