#include "gtcomb/gt_series.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gtcomb {

int GTKey::total_degree() const {
  int n = 0;
  for (int d : degree) n += d;
  return n;
}

void GTKey::canonicalize() {
  for (size_t slot = 0; slot < contacts.size(); ++slot) {
    const auto& orders = contacts[slot].orders();
    auto& letters = words[slot].letters;
    if (letters.size() != orders.size())
      throw std::invalid_argument("GTKey: word length != tuple length");
    std::vector<std::pair<int, int>> entries(orders.size());
    for (size_t i = 0; i < orders.size(); ++i)
      entries[i] = {orders[i], letters[i]};
    std::sort(entries.begin(), entries.end());
    std::vector<int> new_orders(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) {
      new_orders[i] = entries[i].first;
      letters[i] = entries[i].second;
    }
    contacts[slot] = ContactTuple(std::move(new_orders));
  }
}

GTSeries::GTSeries(const DivisorBasis* basis, int degree_dim, int ndivisors,
                   int max_degree, int max_abs_chi)
    : basis_(basis),
      degree_dim_(degree_dim),
      ndivisors_(ndivisors),
      max_degree_(max_degree),
      max_abs_chi_(max_abs_chi) {
  if (!basis) throw std::invalid_argument("GTSeries: null basis");
  if (degree_dim < 1 || ndivisors < 0 || max_degree < 0 || max_abs_chi < 0)
    throw std::invalid_argument("GTSeries: bad shape parameters");
}

void GTSeries::validate(const GTKey& key) const {
  if (static_cast<int>(key.degree.size()) != degree_dim_)
    throw std::invalid_argument("GTSeries: degree vector of wrong length");
  if (static_cast<int>(key.contacts.size()) != ndivisors_ ||
      key.words.size() != key.contacts.size())
    throw std::invalid_argument("GTSeries: wrong number of contact slots");
  for (size_t i = 0; i < key.contacts.size(); ++i) {
    if (key.words[i].basis != basis_)
      throw std::invalid_argument("GTSeries: word over a different basis");
    if (key.words[i].letters.size() !=
        static_cast<size_t>(key.contacts[i].length()))
      throw std::invalid_argument("GTSeries: word length != tuple length");
    for (int letter : key.words[i].letters)
      if (letter < 0 || letter >= basis_->size())
        throw std::invalid_argument("GTSeries: letter outside basis");
  }
}

void GTSeries::add(GTKey key, const Rat& coeff) {
  if (coeff == 0) return;
  key.canonicalize();
  validate(key);
  if (key.total_degree() > max_degree_ ||
      std::abs(key.chi) > max_abs_chi_)
    return;  // truncation: out-of-bound keys are dropped eagerly
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void GTSeries::add_series(const GTSeries& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
}

void GTSeries::scale(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [k, v] : terms_) v *= c;
}

Rat GTSeries::coeff(GTKey key) const {
  key.canonicalize();
  auto it = terms_.find(key);
  return it == terms_.end() ? Rat(0) : it->second;
}

GTKey GTSeries::unit_key() const {
  GTKey k;
  k.chi = 0;
  k.degree.assign(degree_dim_, 0);
  k.contacts.assign(ndivisors_, ContactTuple{});
  k.words.assign(ndivisors_, HomologyWord{basis_, {}});
  return k;
}

GTSeries GTSeries::same_shape_empty() const {
  return GTSeries(basis_, degree_dim_, ndivisors_, max_degree_, max_abs_chi_);
}

std::pair<Rat, int> star_pair(const HomologyWord& zx, const HomologyWord& zy,
                              const ContactTuple& sx, const ContactTuple& sy) {
  if (!zx.basis || zx.basis != zy.basis)
    throw std::invalid_argument("star_pair: words over different bases");
  if (zx.letters.size() != static_cast<size_t>(sx.length()) ||
      zy.letters.size() != static_cast<size_t>(sy.length()))
    throw std::invalid_argument("star_pair: word length != tuple length");
  if (sx != sy) return {Rat(0), 0};
  const int l = sx.length();
  Rat c(sx.order_product(), factorial(l));
  for (int i = 0; i < l; ++i) {
    c *= zx.basis->pairing(zx.letters[i], zy.letters[i]);
    if (c == 0) return {Rat(0), -2 * l};
  }
  return {c, -2 * l};
}

GTSeries series_star(const GTSeries& x, const GTSeries& y,
                     const DegreeCombine& combine_degree) {
  if (x.basis() != y.basis())
    throw std::invalid_argument("series_star: series over different bases");
  if (x.ndivisors() < 1 || y.ndivisors() < 1)
    throw std::invalid_argument("series_star: both series need a glue slot");
  const int out_dim = static_cast<int>(
      combine_degree(std::vector<int>(x.degree_dim(), 0),
                     std::vector<int>(y.degree_dim(), 0))
          .size());
  GTSeries out(x.basis(), out_dim, x.ndivisors() - 1 + y.ndivisors() - 1,
               std::max(x.max_degree(), y.max_degree()),
               std::max(x.max_abs_chi(), y.max_abs_chi()));
  for (const auto& [kx, cx] : x.terms()) {
    const size_t gx = kx.contacts.size() - 1;  // X's last slot glues
    for (const auto& [ky, cy] : y.terms()) {
      auto [pair_coeff, chi_shift] =
          star_pair(kx.words[gx], ky.words[0], kx.contacts[gx], ky.contacts[0]);
      if (pair_coeff == 0) continue;
      GTKey k;
      k.chi = kx.chi + ky.chi + chi_shift;
      k.degree = combine_degree(kx.degree, ky.degree);
      k.contacts.assign(kx.contacts.begin(), kx.contacts.end() - 1);
      k.contacts.insert(k.contacts.end(), ky.contacts.begin() + 1,
                        ky.contacts.end());
      k.words.assign(kx.words.begin(), kx.words.end() - 1);
      k.words.insert(k.words.end(), ky.words.begin() + 1, ky.words.end());
      out.add(std::move(k), cx * cy * pair_coeff);
    }
  }
  return out;
}

GTKey disconnected_merge(const GTKey& a, const GTKey& b) {
  if (a.degree.size() != b.degree.size() ||
      a.contacts.size() != b.contacts.size())
    throw std::invalid_argument("disconnected_merge: incompatible key shapes");
  GTKey k;
  k.chi = a.chi + b.chi;
  k.degree.resize(a.degree.size());
  for (size_t i = 0; i < a.degree.size(); ++i)
    k.degree[i] = a.degree[i] + b.degree[i];
  k.contacts.resize(a.contacts.size());
  k.words.resize(a.contacts.size());
  for (size_t slot = 0; slot < a.contacts.size(); ++slot) {
    std::vector<int> orders = a.contacts[slot].orders();
    orders.insert(orders.end(), b.contacts[slot].orders().begin(),
                  b.contacts[slot].orders().end());
    std::vector<int> letters = a.words[slot].letters;
    letters.insert(letters.end(), b.words[slot].letters.begin(),
                   b.words[slot].letters.end());
    k.contacts[slot] = ContactTuple(std::move(orders));
    k.words[slot] = HomologyWord{a.words[slot].basis, std::move(letters)};
  }
  k.canonicalize();
  return k;
}

GTSeries series_product(const GTSeries& x, const GTSeries& y,
                        const KeyCombine& combine) {
  GTSeries out = x.same_shape_empty();
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) out.add(combine(kx, ky), cx * cy);
  return out;
}

namespace {

void require_positive_degrees(const GTSeries& g, const char* who) {
  for (const auto& [k, c] : g.terms())
    if (k.total_degree() < 1)
      throw std::domain_error(std::string(who) +
                              ": a term of total degree 0 makes the truncated "
                              "sum non-terminating");
}

}  // namespace

GTSeries exp_truncated(const GTSeries& g, const KeyCombine& combine) {
  require_positive_degrees(g, "exp_truncated");
  GTSeries out = g.same_shape_empty();
  out.add(g.unit_key(), 1);
  GTSeries power = g.same_shape_empty();
  power.add(g.unit_key(), 1);
  // power holds g^m / m! after the m-th pass; every key of g has degree >= 1,
  // so the loop dies within max_degree passes.
  for (int m = 1; m <= g.max_degree(); ++m) {
    power = series_product(power, g, combine);
    power.scale(Rat(1, m));
    if (power.is_zero()) break;
    out.add_series(power);
  }
  return out;
}

GTSeries log_truncated(const GTSeries& g, const KeyCombine& combine) {
  const GTKey unit = g.unit_key();
  if (g.coeff(unit) != 1)
    throw std::domain_error("log_truncated: unit coefficient must be 1");
  GTSeries n = g;
  n.add(unit, -1);
  require_positive_degrees(n, "log_truncated");
  GTSeries out = g.same_shape_empty();
  GTSeries power = n;
  for (int m = 1; m <= g.max_degree(); ++m) {
    GTSeries contrib = power;
    contrib.scale(Rat((m % 2) ? 1 : -1, m));
    out.add_series(contrib);
    power = series_product(power, n, combine);
    if (power.is_zero()) break;
  }
  return out;
}

GTSeries exp_truncated(const GTSeries& g) {
  return exp_truncated(g, disconnected_merge);
}

GTSeries log_truncated(const GTSeries& g) {
  return log_truncated(g, disconnected_merge);
}

}  // namespace gtcomb
