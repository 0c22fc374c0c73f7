#pragma once

// Truncated generating series of relative invariants, and the operations the
// gluing formalism needs: the star pairing along a common divisor, and exp/log
// between connected and disconnected series.
//
// A key records the (doubled) Euler characteristic chi, a degree vector, and
// one contact tuple plus homology word per relative divisor.  Keys are kept in
// a canonical form where each tuple is nondecreasing with its word sorted
// along, so a key stands for an *unordered* contact profile.  Coefficients
// follow the matching multiset normalization: a disconnected configuration
// built from connected pieces P_i with multiplicities m_i carries
//
//     ( prod_i c(P_i)^{m_i} ) / ( prod_i m_i! ).
//
// Under this normalization the shuffle (rule-of-assignment) product on
// ordered keys descends to the plain profile-merge product below (the
// C(l1+l2, l1) interleaving count cancels against the ordered-to-unordered
// conversion factors), and exp of a connected series is literally the
// disconnected series assembled from multisets of its terms.
//
// The star pairing of two single-divisor terms with the same tuple s is
//
//     <s> / l(s)!  *  prod_i pairing(x_i, y_i),
//
// where <s> is the product of the contact orders, and the glued key's chi is
// chi_X + chi_Y - 2 l(s).

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "gtcomb/divisor.hpp"
#include "gtcomb/mult_index.hpp"
#include "gtcomb/rational.hpp"

namespace gtcomb {

struct GTKey {
  int chi = 0;
  std::vector<int> degree;
  std::vector<ContactTuple> contacts;
  std::vector<HomologyWord> words;  // parallel to contacts

  int total_degree() const;
  // Reorders each slot's (order, letter) pairs into nondecreasing order.
  void canonicalize();

  bool operator==(const GTKey&) const = default;
  auto operator<=>(const GTKey&) const = default;
};

class GTSeries {
 public:
  // degree_dim: length of every key's degree vector; ndivisors: number of
  // contact slots per key; truncation: keys with total_degree > max_degree or
  // |chi| > max_abs_chi are dropped eagerly on insertion.
  GTSeries(const DivisorBasis* basis, int degree_dim, int ndivisors,
           int max_degree, int max_abs_chi);

  const DivisorBasis* basis() const { return basis_; }
  int degree_dim() const { return degree_dim_; }
  int ndivisors() const { return ndivisors_; }
  int max_degree() const { return max_degree_; }
  int max_abs_chi() const { return max_abs_chi_; }

  // Canonicalizes the key, validates its shape against the series, and
  // accumulates; zero results are erased so no stored coefficient is zero.
  void add(GTKey key, const Rat& coeff);
  void add_series(const GTSeries& other);
  void scale(const Rat& c);

  Rat coeff(GTKey key) const;
  const std::map<GTKey, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // The empty-profile key (chi 0, degree 0, all slots empty).
  GTKey unit_key() const;
  GTSeries same_shape_empty() const;

  bool operator==(const GTSeries& o) const { return terms_ == o.terms_; }

 private:
  void validate(const GTKey& key) const;

  const DivisorBasis* basis_;
  int degree_dim_;
  int ndivisors_;
  int max_degree_;
  int max_abs_chi_;
  std::map<GTKey, Rat> terms_;
};

// Star pairing of two pure terms along matching contact tuples.  Returns the
// rational coefficient and the chi shift (-2 l(s)); tuples that differ as
// sequences pair to (0, 0).  Throws std::invalid_argument on length or basis
// mismatches.
std::pair<Rat, int> star_pair(const HomologyWord& zx, const HomologyWord& zy,
                              const ContactTuple& sx, const ContactTuple& sy);

using DegreeCombine =
    std::function<std::vector<int>(const std::vector<int>&, const std::vector<int>&)>;

// Coefficientwise star pairing of two series along one divisor: X's last
// contact slot glues against Y's first, the remaining slots pass through
// (X's, then Y's).  Every output chi is chi_X + chi_Y - 2 l(s).
GTSeries series_star(const GTSeries& x, const GTSeries& y,
                     const DegreeCombine& combine_degree);

// Key-combine rule for products of series terms.  disconnected_merge adds chi
// and degree and merges the contact profiles slot by slot.
using KeyCombine = std::function<GTKey(const GTKey&, const GTKey&)>;
GTKey disconnected_merge(const GTKey& a, const GTKey& b);

GTSeries series_product(const GTSeries& x, const GTSeries& y,
                        const KeyCombine& combine);

// exp/log with respect to the given product, truncated by the series bounds.
// exp requires every key of g to have total degree >= 1 (otherwise the sum
// does not terminate under truncation): std::domain_error.  log requires the
// unit coefficient to be exactly 1 and every other key to have total degree
// >= 1: std::domain_error.
GTSeries exp_truncated(const GTSeries& g, const KeyCombine& combine);
GTSeries log_truncated(const GTSeries& g, const KeyCombine& combine);

GTSeries exp_truncated(const GTSeries& g);
GTSeries log_truncated(const GTSeries& g);

}  // namespace gtcomb
