#include "gtcomb/rel_invariants.hpp"

#include <stdexcept>

namespace gtcomb {

namespace {

void check_p1_inputs(int g, int d, const ContactTuple& s0,
                     const ContactTuple& sinf) {
  if (d < 1) throw std::invalid_argument("p1 table: degree must be >= 1");
  if (g < 0) throw std::invalid_argument("p1 table: negative genus");
  if (s0.degree() != d || sinf.degree() != d)
    throw std::invalid_argument(
        "p1 table: contact tuples must have total order d");
}

HomologyWord repeated_word(const DivisorBasis& basis, const std::string& label,
                           int len) {
  HomologyWord w;
  w.basis = &basis;
  w.letters.assign(len, basis.index_of(label));
  return w;
}

}  // namespace

int relative_p1_dimension(int g, int d, const ContactTuple& s0,
                          const ContactTuple& sinf) {
  check_p1_inputs(g, d, s0, sinf);
  return 2 * g - 2 + s0.length() + sinf.length();
}

Rat p1_two_point(int g, int d, const ContactTuple& s0,
                 const ContactTuple& sinf) {
  check_p1_inputs(g, d, s0, sinf);
  // Only the maximally ramified genus-0 cover z -> z^d survives; its lone
  // automorphism group Z/d contributes the 1/d.
  if (g == 0 && s0.length() == 1 && sinf.length() == 1) return Rat(1, d);
  return Rat(0);
}

Rat p1_branch_point(int g, int d, const ContactTuple& s0,
                    const ContactTuple& sinf) {
  check_p1_inputs(g, d, s0, sinf);
  if (g != 0) return Rat(0);
  const int l0 = s0.length(), li = sinf.length();
  if ((l0 == 1 && li == 2) || (l0 == 2 && li == 1)) return Rat(1);
  return Rat(0);
}

bool fn_dimension_allows(int g, int a, int insertion_deg, int insertion_len) {
  return g + 2 * a <= 1 + insertion_deg - insertion_len;
}

namespace {

void check_fn_inputs(const FnDegree& A, int g, const ContactTuple& s0,
                     const ContactTuple& sinf) {
  if (A.n < 0 || A.a < 0 || A.b < 0)
    throw std::invalid_argument("fn table: n, a, b must be >= 0");
  if (g < 0) throw std::invalid_argument("fn table: negative genus");
  if (s0.degree() != A.dot_s0() || sinf.degree() != A.dot_sinf())
    throw std::invalid_argument(
        "fn table: contact degrees must match A.S0 and A.Sinf");
}

}  // namespace

TensorSum fn_no_constraint(const FnDegree& A, int g, const ContactTuple& s0,
                           const ContactTuple& sinf) {
  check_fn_inputs(A, g, s0, sinf);
  const DivisorBasis& line = DivisorBasis::line();
  // Support: a single b-fold cover of a fiber, constrained only by where it
  // meets the two sections; its class is (1/b) times the Kunneth diagonal.
  if (g == 0 && A.a == 0 && A.b >= 1 && s0 == ContactTuple{A.b} &&
      sinf == ContactTuple{A.b}) {
    TensorSum out;
    out.push_back({repeated_word(line, "L", 1), repeated_word(line, "pt", 1),
                   Rat(1, A.b)});
    out.push_back({repeated_word(line, "pt", 1), repeated_word(line, "L", 1),
                   Rat(1, A.b)});
    return out;
  }
  return {};
}

TensorSum fn_point_insertion(const FnDegree& A, int g, const ContactTuple& s0,
                             const ContactTuple& sinf) {
  check_fn_inputs(A, g, s0, sinf);
  const DivisorBasis& line = DivisorBasis::line();
  if (g == 0 && A.a == 0 && A.b >= 1 && s0 == ContactTuple{A.b} &&
      sinf == ContactTuple{A.b}) {
    // The point pins the fiber, and with it both contact points.
    return {{repeated_word(line, "pt", 1), repeated_word(line, "pt", 1),
             Rat(1)}};
  }
  if (g == 0 && A.a == 1) {
    // One section-class curve through the point; its contact points move
    // freely, so the value is the fundamental word.
    return {{repeated_word(line, "L", s0.length()),
             repeated_word(line, "L", sinf.length()), Rat(1)}};
  }
  return {};
}

}  // namespace gtcomb
