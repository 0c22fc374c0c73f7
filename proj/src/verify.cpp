#include "gtcomb/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "gtcomb/divisor.hpp"
#include "gtcomb/gt_series.hpp"
#include "gtcomb/mult_index.hpp"
#include "gtcomb/rational.hpp"
#include "gtcomb/rel_invariants.hpp"
#include "gtcomb/shuffle.hpp"

namespace gtcomb {

void SuiteReport::count(bool pass,
                        const std::function<std::string()>& describe) {
  ++checks;
  if (pass) return;
  ++failures;
  if (!first_failure) first_failure = describe();
}

namespace {

std::string key_repr(const GTKey& key) {
  std::ostringstream os;
  os << "chi=" << key.chi << " deg=(";
  for (size_t i = 0; i < key.degree.size(); ++i)
    os << (i ? "," : "") << key.degree[i];
  os << ")";
  for (size_t s = 0; s < key.contacts.size(); ++s) {
    os << " slot" << s << "=" << key.contacts[s];
  }
  return os.str();
}

void compare_series(SuiteReport& rep, const GTSeries& actual,
                    const GTSeries& expected) {
  for (const auto& [key, c] : expected.terms()) {
    Rat got = actual.coeff(key);
    rep.count(got == c, [&] {
      return "coefficient of " + key_repr(key) + ": got " + rat_repr(got) +
             ", expected " + rat_repr(c);
    });
  }
  for (const auto& [key, c] : actual.terms()) {
    rep.count(expected.coeff(key) == c, [&] {
      return "unexpected term " + key_repr(key) + " = " + rat_repr(c);
    });
  }
}

}  // namespace

GTSeries exp_gw_connected(int max_degree) {
  const DivisorBasis& basis = DivisorBasis::point();
  GTSeries connected(&basis, 1, 2, max_degree, 2 * max_degree + 2);
  for (int d = 1; d <= max_degree; ++d) {
    GTKey key;
    key.chi = 2;
    key.degree = {d};
    key.contacts = {ContactTuple{d}, ContactTuple{d}};
    key.words = {make_word(basis, {"pt"}), make_word(basis, {"pt"})};
    connected.add(key, p1_two_point(0, d, key.contacts[0], key.contacts[1]));
  }
  return connected;
}

SuiteReport verify_exp_gw(int max_degree) {
  SuiteReport rep;
  rep.name = "exp-gw";
  const DivisorBasis& basis = DivisorBasis::point();
  GTSeries connected = exp_gw_connected(max_degree);

  // Disconnected series assembled by hand: a multiset of connected covers
  // with multiplicity m_d in degree d contributes prod (1/d)^{m_d} / m_d!.
  GTSeries expected = connected.same_shape_empty();
  for_each_multindex_of_weight_at_most(max_degree, [&](const MultIndex& mu) {
    GTKey key;
    key.chi = 2 * length(mu);
    key.degree = {weighted_sum(mu)};
    ContactTuple s = to_contact_tuple(mu);
    std::vector<std::string> labels(s.length(), "pt");
    key.contacts = {s, s};
    key.words = {make_word(basis, labels), make_word(basis, labels)};
    Rat c(1);
    for (auto [d, m] : mu.parts()) {
      for (int t = 0; t < m; ++t) c /= d;
      c /= Rat(factorial(m));
    }
    expected.add(key, c);
  });

  GTSeries actual = exp_truncated(connected);
  compare_series(rep, actual, expected);
  rep.count(actual == expected, [] { return std::string("series differ"); });
  return rep;
}

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rat rand_rat(std::mt19937_64& rng) {
  int p = rand_int(rng, -4, 4);
  if (p == 0) p = 1;
  return Rat(p, rand_int(rng, 1, 4));
}

ContactTuple rand_tuple(std::mt19937_64& rng, int min_len, int max_len) {
  std::vector<int> orders(rand_int(rng, min_len, max_len));
  for (int& k : orders) k = rand_int(rng, 1, 4);
  return ContactTuple(std::move(orders));
}

HomologyWord rand_word(std::mt19937_64& rng, const DivisorBasis& basis,
                       int len) {
  HomologyWord w;
  w.basis = &basis;
  w.letters.resize(len);
  for (int& x : w.letters) x = rand_int(rng, 0, basis.size() - 1);
  return w;
}

GTSeries rand_series(std::mt19937_64& rng, const DivisorBasis& basis,
                     int ndivisors, int max_degree, int max_abs_chi,
                     int min_total_degree) {
  GTSeries out(&basis, 1, ndivisors, max_degree, max_abs_chi);
  const int nkeys = rand_int(rng, 1, 3);
  for (int t = 0; t < nkeys; ++t) {
    GTKey key;
    key.chi = 2 * rand_int(rng, min_total_degree > 0 ? 1 : 0, 2);
    key.degree = {rand_int(rng, min_total_degree, 3)};
    for (int s = 0; s < ndivisors; ++s) {
      ContactTuple tuple = rand_tuple(rng, 0, 2);
      key.contacts.push_back(tuple);
      key.words.push_back(rand_word(rng, basis, tuple.length()));
    }
    out.add(key, rand_rat(rng));
  }
  return out;
}

void check_diagonal_resolution(SuiteReport& rep, const DivisorBasis& basis) {
  ClassPairSum diag = kunneth_diagonal(basis);
  for (int i = 0; i < basis.size(); ++i) {
    for (int k = 0; k < basis.size(); ++k) {
      Rat sum;
      for (const ClassPair& p : diag) {
        if (p.left == i) sum += p.coeff * basis.pairing(p.right, k);
      }
      Rat want = (i == k) ? Rat(1) : Rat(0);
      rep.count(sum == want, [&] {
        return "diagonal resolution fails on basis " + basis.name() + " at (" +
               std::to_string(i) + "," + std::to_string(k) + "): got " +
               rat_repr(sum);
      });
    }
  }
}

}  // namespace

SuiteReport verify_pairing(int trials, unsigned long seed) {
  SuiteReport rep;
  rep.name = "pairing";
  std::mt19937_64 rng(seed);

  check_diagonal_resolution(rep, DivisorBasis::point());
  check_diagonal_resolution(rep, DivisorBasis::line());
  {
    // Same homology, intersection form scaled by 2: the diagonal must pick
    // up the inverse scaling for the resolution identity to survive.
    DivisorBasis doubled("doubled-line", 1,
                         {{"pt", 0}, {"L", 1}},
                         {{Rat(0), Rat(2)}, {Rat(2), Rat(0)}});
    check_diagonal_resolution(rep, doubled);
  }

  for (int t = 0; t < trials; ++t) {
    const DivisorBasis& basis =
        (rand_int(rng, 0, 1) == 0) ? DivisorBasis::point()
                                   : DivisorBasis::line();
    ContactTuple s = rand_tuple(rng, 1, 4);
    const int len = s.length();
    HomologyWord zx = rand_word(rng, basis, len);
    HomologyWord zy = rand_word(rng, basis, len);

    auto [c_xy, shift_xy] = star_pair(zx, zy, s, s);
    auto [c_yx, shift_yx] = star_pair(zy, zx, s, s);

    rep.count(c_xy == c_yx && shift_xy == shift_yx, [&] {
      return "star pairing is not symmetric at trial " + std::to_string(t);
    });
    rep.count(shift_xy == -2 * len, [&] {
      return "chi shift is not -2 l(s) at trial " + std::to_string(t);
    });

    // Nonzero exactly when every insertion pair is complementary.
    bool complementary = true;
    for (int i = 0; i < len; ++i) {
      if (basis.pairing(zx.letters[i], zy.letters[i]) == 0)
        complementary = false;
    }
    rep.count((c_xy != 0) == complementary, [&] {
      return "pairing vanishing mismatch at trial " + std::to_string(t);
    });

    // Reordering the contact points of both sides together changes nothing.
    {
      std::vector<int> perm(len);
      for (int i = 0; i < len; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> s2(len);
      HomologyWord zx2 = zx, zy2 = zy;
      for (int i = 0; i < len; ++i) {
        s2[i] = s.orders()[perm[i]];
        zx2.letters[i] = zx.letters[perm[i]];
        zy2.letters[i] = zy.letters[perm[i]];
      }
      auto [c_p, shift_p] = star_pair(zx2, zy2, ContactTuple(s2), ContactTuple(s2));
      rep.count(c_p == c_xy && shift_p == shift_xy, [&] {
        return "star pairing is not reorder-invariant at trial " +
               std::to_string(t);
      });
    }

    // A tuple that differs as a sequence pairs to zero.
    {
      std::vector<int> other = s.orders();
      other[rand_int(rng, 0, len - 1)] += 1;
      auto [c_m, shift_m] = star_pair(zx, zy, s, ContactTuple(other));
      rep.count(c_m == 0 && shift_m == 0, [&] {
        return "mismatched tuples failed to vanish at trial " +
               std::to_string(t);
      });
    }

    // Bilinearity of the serieswise star in its first argument.
    {
      const int max_deg = 6, max_chi = 40;
      GTSeries x1 = rand_series(rng, basis, 1, max_deg, max_chi, 0);
      GTSeries x2 = rand_series(rng, basis, 1, max_deg, max_chi, 0);
      GTSeries y = rand_series(rng, basis, 1, max_deg, max_chi, 0);
      Rat lambda = rand_rat(rng);
      DegreeCombine add_degree = [](const std::vector<int>& a,
                                    const std::vector<int>& b) {
        return std::vector<int>{a.at(0) + b.at(0)};
      };

      GTSeries left_input = x1;
      GTSeries x2_scaled = x2;
      x2_scaled.scale(lambda);
      left_input.add_series(x2_scaled);
      GTSeries lhs = series_star(left_input, y, add_degree);

      GTSeries rhs = series_star(x1, y, add_degree);
      GTSeries cross = series_star(x2, y, add_degree);
      cross.scale(lambda);
      rhs.add_series(cross);

      rep.count(lhs == rhs, [&] {
        return "series_star is not linear in X at trial " + std::to_string(t);
      });
    }
  }
  return rep;
}

SuiteReport verify_round_trip(int trials, unsigned long seed) {
  SuiteReport rep;
  rep.name = "round-trip";
  std::mt19937_64 rng(seed);
  const int max_degree = 5;
  const int max_abs_chi = 1000;  // never reached: truncation is by degree only

  for (int t = 0; t < trials; ++t) {
    const DivisorBasis& basis =
        (rand_int(rng, 0, 1) == 0) ? DivisorBasis::point()
                                   : DivisorBasis::line();
    GTSeries g = rand_series(rng, basis, 2, max_degree, max_abs_chi, 1);

    GTSeries h = exp_truncated(g);
    GTSeries back = log_truncated(h);
    rep.count(back == g, [&] {
      return "log(exp(G)) != G at trial " + std::to_string(t);
    });

    GTSeries h2 = exp_truncated(back);
    rep.count(h2 == h, [&] {
      return "exp(log(H)) != H at trial " + std::to_string(t);
    });

    rep.count(h.coeff(h.unit_key()) == 1, [&] {
      return "exp(G) has unit coefficient != 1 at trial " + std::to_string(t);
    });
  }
  return rep;
}

SuiteReport verify_shuffle_counts(int kmax) {
  SuiteReport rep;
  rep.name = "shuffle";
  for (int k1 = 0; k1 <= kmax; ++k1) {
    for (int k2 = 0; k2 <= kmax; ++k2) {
      auto rules = enumerate_shuffles(k1, k2);
      rep.count(Int(rules.size()) == binomial(k1 + k2, k1), [&] {
        return "shuffle count (" + std::to_string(k1) + "," +
               std::to_string(k2) + ") = " + std::to_string(rules.size()) +
               " != C(k1+k2,k1)";
      });

      std::set<std::vector<std::pair<int, int>>> images;
      bool all_valid = true;
      for (const auto& rule : rules) {
        images.insert(rule.image);
        int next1 = 1, next2 = 1;
        if (static_cast<int>(rule.image.size()) != k1 + k2) all_valid = false;
        for (auto [block, idx] : rule.image) {
          if (block == 1 && idx == next1)
            ++next1;
          else if (block == 2 && idx == next2)
            ++next2;
          else
            all_valid = false;
        }
        if (next1 != k1 + 1 || next2 != k2 + 1) all_valid = false;
      }
      rep.count(all_valid && images.size() == rules.size(), [&] {
        return "invalid or duplicated shuffle at (" + std::to_string(k1) +
               "," + std::to_string(k2) + ")";
      });
    }
  }
  return rep;
}

SuiteReport verify_dimension_vanishing(int dmax, int gmax) {
  SuiteReport rep;
  rep.name = "dimension";

  for (int d = 1; d <= dmax; ++d) {
    std::vector<ContactTuple> tuples;
    for_each_multindex_of_weight(
        d, [&](const MultIndex& a) { tuples.push_back(to_contact_tuple(a)); });
    for (int g = 0; g <= gmax; ++g) {
      for (const ContactTuple& s0 : tuples) {
        for (const ContactTuple& sinf : tuples) {
          const int dim = relative_p1_dimension(g, d, s0, sinf);
          auto where = [&] {
            std::ostringstream os;
            os << "d=" << d << " g=" << g << " s0=" << s0 << " sinf=" << sinf;
            return os.str();
          };
          rep.count((p1_two_point(g, d, s0, sinf) != 0) == (dim == 0), [&] {
            return "p1_two_point support is not {dim == 0} at " + where();
          });
          rep.count((p1_branch_point(g, d, s0, sinf) != 0) == (dim == 1), [&] {
            return "p1_branch_point support is not {dim == 1} at " + where();
          });
        }
      }
    }
  }

  // Hirzebruch tables: anything nonzero must clear the dimension gate.
  for (int n = 0; n <= 2; ++n) {
    for (int a = 0; a <= 1; ++a) {
      for (int b = 0; b <= 3; ++b) {
        if (a == 0 && b == 0) continue;
        FnDegree A{n, a, b};
        std::vector<ContactTuple> t0, ti;
        for_each_multindex_of_weight(A.dot_s0(), [&](const MultIndex& m) {
          t0.push_back(to_contact_tuple(m));
        });
        for_each_multindex_of_weight(A.dot_sinf(), [&](const MultIndex& m) {
          ti.push_back(to_contact_tuple(m));
        });
        for (int g = 0; g <= gmax; ++g) {
          for (const ContactTuple& s0 : t0) {
            for (const ContactTuple& sinf : ti) {
              auto where = [&] {
                std::ostringstream os;
                os << "F" << n << " a=" << a << " b=" << b << " g=" << g
                   << " s0=" << s0 << " sinf=" << sinf;
                return os.str();
              };
              bool has_free = !fn_no_constraint(A, g, s0, sinf).empty();
              rep.count(!has_free || fn_dimension_allows(g, a, 0, 0), [&] {
                return "fn_no_constraint breaches the dimension gate at " +
                       where();
              });
              bool has_pt = !fn_point_insertion(A, g, s0, sinf).empty();
              rep.count(!has_pt || fn_dimension_allows(g, a, 2, 1), [&] {
                return "fn_point_insertion breaches the dimension gate at " +
                       where();
              });
            }
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace gtcomb
