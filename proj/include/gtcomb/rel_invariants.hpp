#pragma once

// Closed-form tables of the low-genus relative invariants that seed every
// computation here: tubes and branched covers of P^1 relative two points,
// and fiber/section classes of the Hirzebruch surfaces F_n relative the zero
// and infinity sections, together with the dimension counts that force all
// other values to vanish.  Each table is a total function: inputs outside the
// closed form's support return 0 (malformed inputs throw).
//
//   p1_two_point      (P^1, {0, inf}), no insertions:  1/d at g = 0 with
//                     s0 = sinf = (d); every other value vanishes.
//   p1_branch_point   one simple branch point fixed:   1 at g = 0 when one of
//                     the two tuples has length 1 and the other length 2 (the
//                     orderings of the remaining simple branch points are
//                     already divided out).
//   fn_no_constraint  F_n, class b*fiber, no insertions: (1/b) of the Kunneth
//                     diagonal S0 (x) 1 + 1 (x) Sinf at g = 0, s0 = sinf = (b).
//   fn_point_insertion one point insertion.  Fiber case (a = 0): the contact
//                     points are pinned over the point, value pt (x) pt with
//                     coefficient 1.  Section case (a = 1): the full
//                     fundamental word with coefficient 1.
//
// Contact degrees on F_n:  A = a S0 + b f meets Sinf in b and S0 in na + b
// points (counted with contact order), and <c1, A> = (2 + n) a + 2 b.

#include <vector>

#include "gtcomb/divisor.hpp"
#include "gtcomb/mult_index.hpp"
#include "gtcomb/rational.hpp"

namespace gtcomb {

// Expected complex dimension 2g - 2 + l(s0) + l(sinf) of the moduli of degree
// d covers of P^1 relative {0, inf}; throws std::invalid_argument unless
// |s0| == |sinf| == d.
int relative_p1_dimension(int g, int d, const ContactTuple& s0,
                          const ContactTuple& sinf);

Rat p1_two_point(int g, int d, const ContactTuple& s0, const ContactTuple& sinf);

Rat p1_branch_point(int g, int d, const ContactTuple& s0,
                    const ContactTuple& sinf);

struct FnDegree {
  int n = 0;  // which Hirzebruch surface
  int a = 0;  // coefficient of the zero section S0
  int b = 0;  // coefficient of the fiber f

  int dot_s0() const { return n * a + b; }
  int dot_sinf() const { return b; }
  int chern() const { return (2 + n) * a + 2 * b; }
};

// Dimension gate for F_n invariants with one insertion of total complex
// degree insertion_deg spread over insertion_len classes: nonzero invariants
// need g + 2a <= 1 + insertion_deg - insertion_len.
bool fn_dimension_allows(int g, int a, int insertion_deg, int insertion_len);

// One pure tensor (word on the S0 side) (x) (word on the Sinf side), both
// over DivisorBasis::line().
struct TensorTerm {
  HomologyWord s0_side;
  HomologyWord sinf_side;
  Rat coeff;
};
using TensorSum = std::vector<TensorTerm>;

// Throws std::invalid_argument unless |s0| == A.dot_s0(), |sinf| == A.dot_sinf(),
// n >= 0, a >= 0, b >= 0, g >= 0.
TensorSum fn_no_constraint(const FnDegree& A, int g, const ContactTuple& s0,
                           const ContactTuple& sinf);
TensorSum fn_point_insertion(const FnDegree& A, int g, const ContactTuple& s0,
                             const ContactTuple& sinf);

}  // namespace gtcomb
