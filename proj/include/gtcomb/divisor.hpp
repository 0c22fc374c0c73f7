#pragma once

// Homology bases of the divisors we glue along.  A DivisorBasis lists the
// even homology classes of the divisor with their complex degrees and the
// intersection pairing between them; contact points carry words of these
// classes.  Two instances cover everything in scope:
//
//   point():  a point divisor, one class "pt" with self-pairing 1;
//   line():   a rational curve (a line, a section, a fiber), classes
//             "pt" in H_0 and "L" in H_2 with pt.L = 1 and all other
//             pairings forced to zero by degree.

#include <compare>
#include <string>
#include <vector>

#include "gtcomb/rational.hpp"

namespace gtcomb {

struct DivisorClass {
  std::string label;
  int degree = 0;  // complex degree (0 for a point class, 1 for a curve class)
};

class DivisorBasis {
 public:
  // Validates: pairing is size x size, symmetric, and an entry may be nonzero
  // only when the two classes' degrees sum to the divisor's complex dimension.
  DivisorBasis(std::string name, int complex_dim,
               std::vector<DivisorClass> classes,
               std::vector<std::vector<Rat>> pairing);

  const std::string& name() const { return name_; }
  int complex_dim() const { return complex_dim_; }
  int size() const { return static_cast<int>(classes_.size()); }
  const DivisorClass& cls(int i) const { return classes_.at(i); }
  const Rat& pairing(int i, int j) const;
  // Index of the class with the given label; throws std::invalid_argument.
  int index_of(const std::string& label) const;

  static const DivisorBasis& point();
  static const DivisorBasis& line();

 private:
  std::string name_;
  int complex_dim_;
  std::vector<DivisorClass> classes_;
  std::vector<std::vector<Rat>> pairing_;
};

// A word of basis classes, one letter per contact point of a tuple.  Words
// are compared by their letters; all words in a computation must share one
// basis (checked by the series operations).
struct HomologyWord {
  const DivisorBasis* basis = nullptr;
  std::vector<int> letters;

  bool operator==(const HomologyWord& o) const { return letters == o.letters; }
  auto operator<=>(const HomologyWord& o) const {
    return letters <=> o.letters;
  }
};

HomologyWord make_word(const DivisorBasis& basis,
                       const std::vector<std::string>& labels);

// A rational combination of pure tensors e_i (x) e_j of basis classes.
struct ClassPair {
  int left = 0;
  int right = 0;
  Rat coeff;
  bool operator==(const ClassPair&) const = default;
};
using ClassPairSum = std::vector<ClassPair>;

// The Kunneth diagonal sum_i e_i (x) e_i^dual, where e_i^dual is the basis
// of the dual with respect to the intersection pairing.  Throws
// std::domain_error if the pairing matrix is singular.  For point() this is
// pt (x) pt; for line() it is pt (x) L + L (x) pt.
ClassPairSum kunneth_diagonal(const DivisorBasis& basis);

}  // namespace gtcomb
