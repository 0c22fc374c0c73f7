#pragma once

// Multiplicity indices and contact tuples: the bookkeeping vocabulary for
// ramification/tangency patterns along a divisor.
//
// A MultIndex alpha is a finitely supported map {1,2,3,...} -> {0,1,2,...}
// recording how many contacts of each order a configuration carries.  The
// associated numbers follow the usual conventions:
//
//   length(alpha)          |alpha|  = sum alpha_k          (number of contacts)
//   weighted_sum(alpha)    I alpha  = sum k * alpha_k      (total contact order)
//   power_product(alpha)   I^alpha  = prod k^{alpha_k}
//   multi_factorial(alpha) alpha!   = prod alpha_k!
//   multi_binomial(a, b)            = prod C(a_k, b_k)
//
// A ContactTuple is an ordered list of contact orders (entries >= 1); the
// canonical tuple of a MultIndex lists its parts in nondecreasing order.

#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtcomb/rational.hpp"

namespace gtcomb {

class MultIndex {
 public:
  MultIndex() = default;
  MultIndex(std::initializer_list<std::pair<int, int>> parts);

  // epsilon_k: a single contact of order k.
  static MultIndex unit(int k);

  int operator[](int k) const;
  void set(int k, int multiplicity);
  bool is_zero() const { return mult_.empty(); }

  // Underlying sparse map; values are always > 0 and keys >= 1.
  const std::map<int, int>& parts() const { return mult_; }

  MultIndex& operator+=(const MultIndex& o);
  // Componentwise difference; throws std::invalid_argument if any
  // multiplicity would go negative.
  MultIndex& operator-=(const MultIndex& o);
  friend MultIndex operator+(MultIndex a, const MultIndex& b) { return a += b; }
  friend MultIndex operator-(MultIndex a, const MultIndex& b) { return a -= b; }

  bool operator==(const MultIndex&) const = default;
  auto operator<=>(const MultIndex&) const = default;

 private:
  std::map<int, int> mult_;
};

// Componentwise b_k <= a_k for all k.
bool contains(const MultIndex& a, const MultIndex& b);

int length(const MultIndex& a);
int weighted_sum(const MultIndex& a);
Int power_product(const MultIndex& a);
Int multi_factorial(const MultIndex& a);
Int multi_binomial(const MultIndex& a, const MultIndex& b);

// Dense prefix form "[a1,a2,...,ak]" trimmed of trailing zeros; "[]" for 0.
std::string dense_repr(const MultIndex& a);

class ContactTuple {
 public:
  ContactTuple() = default;
  explicit ContactTuple(std::vector<int> orders);
  ContactTuple(std::initializer_list<int> orders);

  int length() const { return static_cast<int>(orders_.size()); }
  // Total contact order |s|.
  int degree() const;
  // <s> = product of the orders (the gluing multiplicity of the tuple).
  Int order_product() const;
  const std::vector<int>& orders() const { return orders_; }
  bool is_nondecreasing() const;

  bool operator==(const ContactTuple&) const = default;
  auto operator<=>(const ContactTuple&) const = default;

 private:
  std::vector<int> orders_;
};

// Canonical nondecreasing tuple of a profile, and the inverse.  Round trips:
// from_contact_tuple(to_contact_tuple(a)) == a for every a, and
// to_contact_tuple(from_contact_tuple(s)) == s iff s is nondecreasing.
ContactTuple to_contact_tuple(const MultIndex& a);
MultIndex from_contact_tuple(const ContactTuple& s);

// Deterministic enumerations (lexicographic in the largest part, descending).
// Every MultIndex with I alpha == w:
void for_each_multindex_of_weight(int w,
                                  const std::function<void(const MultIndex&)>& f);
// Every MultIndex with I alpha <= w:
void for_each_multindex_of_weight_at_most(
    int w, const std::function<void(const MultIndex&)>& f);
// Every 0 <= g <= a componentwise:
void for_each_sub_multindex(const MultIndex& a,
                            const std::function<void(const MultIndex&)>& f);

std::ostream& operator<<(std::ostream& os, const MultIndex& a);
std::ostream& operator<<(std::ostream& os, const ContactTuple& s);

}  // namespace gtcomb
