#include "gtcomb/mult_index.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace gtcomb {

MultIndex::MultIndex(std::initializer_list<std::pair<int, int>> parts) {
  for (const auto& [k, m] : parts) set(k, (*this)[k] + m);
}

MultIndex MultIndex::unit(int k) {
  MultIndex a;
  a.set(k, 1);
  return a;
}

int MultIndex::operator[](int k) const {
  auto it = mult_.find(k);
  return it == mult_.end() ? 0 : it->second;
}

void MultIndex::set(int k, int multiplicity) {
  if (k < 1) throw std::invalid_argument("MultIndex: part size must be >= 1");
  if (multiplicity < 0)
    throw std::invalid_argument("MultIndex: negative multiplicity");
  if (multiplicity == 0)
    mult_.erase(k);
  else
    mult_[k] = multiplicity;
}

MultIndex& MultIndex::operator+=(const MultIndex& o) {
  for (const auto& [k, m] : o.mult_) set(k, (*this)[k] + m);
  return *this;
}

MultIndex& MultIndex::operator-=(const MultIndex& o) {
  for (const auto& [k, m] : o.mult_) {
    int left = (*this)[k] - m;
    if (left < 0)
      throw std::invalid_argument("MultIndex: difference would be negative");
    set(k, left);
  }
  return *this;
}

bool contains(const MultIndex& a, const MultIndex& b) {
  for (const auto& [k, m] : b.parts())
    if (a[k] < m) return false;
  return true;
}

int length(const MultIndex& a) {
  int n = 0;
  for (const auto& [k, m] : a.parts()) n += m;
  return n;
}

int weighted_sum(const MultIndex& a) {
  int n = 0;
  for (const auto& [k, m] : a.parts()) n += k * m;
  return n;
}

Int power_product(const MultIndex& a) {
  Int out = 1;
  for (const auto& [k, m] : a.parts())
    for (int i = 0; i < m; ++i) out *= k;
  return out;
}

Int multi_factorial(const MultIndex& a) {
  Int out = 1;
  for (const auto& [k, m] : a.parts()) out *= factorial(m);
  return out;
}

Int multi_binomial(const MultIndex& a, const MultIndex& b) {
  Int out = 1;
  for (const auto& [k, m] : b.parts()) {
    out *= binomial(a[k], m);
    if (out == 0) return 0;
  }
  return out;
}

std::string dense_repr(const MultIndex& a) {
  int top = a.parts().empty() ? 0 : a.parts().rbegin()->first;
  std::ostringstream os;
  os << '[';
  for (int k = 1; k <= top; ++k) {
    if (k > 1) os << ',';
    os << a[k];
  }
  os << ']';
  return os.str();
}

ContactTuple::ContactTuple(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int x : orders_)
    if (x < 1) throw std::invalid_argument("ContactTuple: orders must be >= 1");
}

ContactTuple::ContactTuple(std::initializer_list<int> orders)
    : ContactTuple(std::vector<int>(orders)) {}

int ContactTuple::degree() const {
  int n = 0;
  for (int x : orders_) n += x;
  return n;
}

Int ContactTuple::order_product() const {
  Int out = 1;
  for (int x : orders_) out *= x;
  return out;
}

bool ContactTuple::is_nondecreasing() const {
  return std::is_sorted(orders_.begin(), orders_.end());
}

ContactTuple to_contact_tuple(const MultIndex& a) {
  std::vector<int> orders;
  orders.reserve(length(a));
  for (const auto& [k, m] : a.parts())
    for (int i = 0; i < m; ++i) orders.push_back(k);
  return ContactTuple(std::move(orders));
}

MultIndex from_contact_tuple(const ContactTuple& s) {
  MultIndex a;
  for (int x : s.orders()) a.set(x, a[x] + 1);
  return a;
}

namespace {

// Builds every multiplicity index with weighted sum exactly (want_exact) or at
// most the budget, adding parts of size <= max_part.  Parts are chosen largest
// first so the output order is deterministic.
void enumerate_rec(int budget, int max_part, bool want_exact, MultIndex& acc,
                   const std::function<void(const MultIndex&)>& f) {
  if (!want_exact || budget == 0) f(acc);
  if (budget == 0) return;
  for (int k = std::min(max_part, budget); k >= 1; --k) {
    acc.set(k, acc[k] + 1);
    enumerate_rec(budget - k, k, want_exact, acc, f);
    acc.set(k, acc[k] - 1);
  }
}

}  // namespace

void for_each_multindex_of_weight(int w,
                                  const std::function<void(const MultIndex&)>& f) {
  if (w < 0) return;
  MultIndex acc;
  enumerate_rec(w, w, true, acc, f);
}

void for_each_multindex_of_weight_at_most(
    int w, const std::function<void(const MultIndex&)>& f) {
  if (w < 0) return;
  MultIndex acc;
  enumerate_rec(w, w, false, acc, f);
}

namespace {

void sub_rec(std::vector<std::pair<int, int>>::const_iterator it,
             std::vector<std::pair<int, int>>::const_iterator end, MultIndex& acc,
             const std::function<void(const MultIndex&)>& f) {
  if (it == end) {
    f(acc);
    return;
  }
  auto [k, m] = *it;
  for (int take = 0; take <= m; ++take) {
    acc.set(k, take);
    sub_rec(std::next(it), end, acc, f);
  }
  acc.set(k, 0);
}

}  // namespace

void for_each_sub_multindex(const MultIndex& a,
                            const std::function<void(const MultIndex&)>& f) {
  std::vector<std::pair<int, int>> parts(a.parts().begin(), a.parts().end());
  MultIndex acc;
  sub_rec(parts.cbegin(), parts.cend(), acc, f);
}

std::ostream& operator<<(std::ostream& os, const MultIndex& a) {
  return os << dense_repr(a);
}

std::ostream& operator<<(std::ostream& os, const ContactTuple& s) {
  os << '(';
  for (size_t i = 0; i < s.orders().size(); ++i) {
    if (i) os << ',';
    os << s.orders()[i];
  }
  return os << ')';
}

}  // namespace gtcomb
