#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "gtcomb/divisor.hpp"
#include "gtcomb/gt_series.hpp"
#include "gtcomb/series_json.hpp"
#include "gtcomb/verify.hpp"

using namespace gtcomb;

namespace {

const DivisorBasis& pt_basis = DivisorBasis::point();
const DivisorBasis& line_basis = DivisorBasis::line();

HomologyWord word_pt(int len) {
  return make_word(pt_basis, std::vector<std::string>(len, "pt"));
}

// A two-slot (P^1, {0, inf})-shaped series over the point divisor.
GTSeries tube_series(int max_degree = 6, int max_chi = 20) {
  return GTSeries(&pt_basis, 1, 2, max_degree, max_chi);
}

GTKey tube_key(int chi, int d) {
  GTKey key;
  key.chi = chi;
  key.degree = {d};
  key.contacts = {ContactTuple{d}, ContactTuple{d}};
  key.words = {word_pt(1), word_pt(1)};
  return key;
}

}  // namespace

TEST_CASE("divisor bases and pairings") {
  CHECK(pt_basis.size() == 1);
  CHECK(pt_basis.pairing(0, 0) == 1);
  CHECK(line_basis.size() == 2);
  CHECK(line_basis.index_of("pt") == 0);
  CHECK(line_basis.index_of("L") == 1);
  CHECK(line_basis.pairing(0, 1) == 1);
  CHECK(line_basis.pairing(0, 0) == 0);  // degrees don't complement
  CHECK_THROWS_AS(line_basis.index_of("H"), std::invalid_argument);

  // Complementarity is validated at construction.
  CHECK_THROWS_AS(DivisorBasis("bad", 1, {{"pt", 0}, {"L", 1}},
                               {{Rat(1), Rat(0)}, {Rat(0), Rat(0)}}),
                  std::invalid_argument);
}

TEST_CASE("Kunneth diagonal of both instances") {
  ClassPairSum d_pt = kunneth_diagonal(pt_basis);
  REQUIRE(d_pt.size() == 1);
  CHECK(d_pt[0] == ClassPair{0, 0, Rat(1)});

  ClassPairSum d_line = kunneth_diagonal(line_basis);
  REQUIRE(d_line.size() == 2);
  CHECK(d_line[0] == ClassPair{0, 1, Rat(1)});  // pt (x) L
  CHECK(d_line[1] == ClassPair{1, 0, Rat(1)});  // L (x) pt

  // Doubling the pairing halves the dual basis, so the diagonal's resolution
  // of the identity is preserved: sum_i pairing(c, e_i) e_i^dual = c.
  DivisorBasis doubled("doubled", 1, {{"pt", 0}, {"L", 1}},
                       {{Rat(0), Rat(2)}, {Rat(2), Rat(0)}});
  ClassPairSum d2 = kunneth_diagonal(doubled);
  REQUIRE(d2.size() == 2);
  for (int c = 0; c < doubled.size(); ++c)
    for (int k = 0; k < doubled.size(); ++k) {
      Rat sum(0);
      for (const auto& term : d2)
        if (term.right == k) sum += doubled.pairing(c, term.left) * term.coeff;
      CHECK(sum == Rat(c == k ? 1 : 0));
    }

  DivisorBasis degenerate("degenerate", 1, {{"pt", 0}, {"L", 1}},
                          {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}});
  CHECK_THROWS_AS(kunneth_diagonal(degenerate), std::domain_error);
}

TEST_CASE("star pairing of single terms") {
  // Full ramification over a point divisor: <s>/l! = d.
  for (int d = 1; d <= 5; ++d) {
    auto [coeff, shift] =
        star_pair(word_pt(1), word_pt(1), ContactTuple{d}, ContactTuple{d});
    CHECK(coeff == Rat(d));
    CHECK(shift == -2);
  }

  // Mismatched tuples pair to zero.
  auto [zero, zshift] =
      star_pair(word_pt(1), word_pt(2), ContactTuple{2}, ContactTuple{1, 1});
  CHECK(zero == 0);
  CHECK(zshift == 0);

  // Line divisor, s = (1,1): <s>/l! = 1/2 and the pt/L pairings are 1.
  HomologyWord ptL = make_word(line_basis, {"pt", "L"});
  HomologyWord Lpt = make_word(line_basis, {"L", "pt"});
  auto [half, hshift] = star_pair(ptL, Lpt, ContactTuple{1, 1}, ContactTuple{1, 1});
  CHECK(half == Rat(1, 2));
  CHECK(hshift == -4);

  // Non-complementary letters (pt against pt on the line) kill the product.
  auto [dead, dshift] =
      star_pair(ptL, ptL, ContactTuple{1, 1}, ContactTuple{1, 1});
  CHECK(dead == 0);
  CHECK(dshift == -4);

  HomologyWord shortw = make_word(line_basis, {"pt"});
  CHECK_THROWS_AS(star_pair(shortw, ptL, ContactTuple{1, 1}, ContactTuple{1, 1}),
                  std::invalid_argument);
}

TEST_CASE("key canonicalization makes profiles unordered") {
  GTKey a;
  a.chi = 2;
  a.degree = {3};
  a.contacts = {ContactTuple{2, 1}};
  a.words = {make_word(line_basis, {"pt", "L"})};
  a.canonicalize();
  CHECK(a.contacts[0] == ContactTuple{1, 2});
  CHECK(a.words[0] == make_word(line_basis, {"L", "pt"}));

  // Ties on the order sort by the letter, so equal profiles collide.
  GTSeries s(&line_basis, 1, 1, 10, 10);
  GTKey b = a;
  b.contacts = {ContactTuple{1, 2}};
  b.words = {make_word(line_basis, {"L", "pt"})};
  s.add(a, Rat(1));
  s.add(b, Rat(2));
  CHECK(s.terms().size() == 1);
  CHECK(s.coeff(a) == Rat(3));
}

TEST_CASE("series accumulate, truncate, and erase zeros") {
  GTSeries s = tube_series(3, 6);
  s.add(tube_key(2, 1), Rat(1, 2));
  s.add(tube_key(2, 1), Rat(-1, 2));
  CHECK(s.is_zero());

  s.add(tube_key(2, 4), Rat(1));  // beyond max_degree: dropped
  CHECK(s.is_zero());
  s.add(tube_key(8, 1), Rat(1));  // beyond max |chi|: dropped
  CHECK(s.is_zero());
  s.add(tube_key(-6, 2), Rat(5));
  CHECK(s.coeff(tube_key(-6, 2)) == Rat(5));

  GTKey bad = tube_key(2, 1);
  bad.degree = {1, 1};
  CHECK_THROWS_AS(s.add(bad, Rat(1)), std::invalid_argument);
}

TEST_CASE("series_star glues matching tubes") {
  DegreeCombine keep_first = [](const std::vector<int>& x,
                                const std::vector<int>& y) {
    REQUIRE(x == y);
    return x;
  };

  for (int d = 1; d <= 4; ++d) {
    GTSeries x = tube_series();
    x.add(tube_key(2, d), Rat(1, d));
    GTSeries glued = series_star(x, x, keep_first);
    // <(d)> cancels one 1/d: the half-tubes compose to the same tube.
    CHECK(glued.coeff(tube_key(2, d)) == Rat(1, d));
    CHECK(glued.terms().size() == 1);
  }

  // Tubes of different degree have mismatched neck tuples: nothing survives.
  GTSeries x = tube_series();
  x.add(tube_key(2, 1), Rat(1));
  GTSeries y = tube_series();
  y.add(tube_key(2, 2), Rat(1));
  DegreeCombine add = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::vector<int>{a[0] + b[0]};
  };
  CHECK(series_star(x, y, add).is_zero());
  CHECK(series_star(x, GTSeries(tube_series()), add).is_zero());
}

TEST_CASE("chi bookkeeping of the glued series") {
  DegreeCombine add = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::vector<int>{a[0] + b[0]};
  };
  GTSeries x = tube_series(12, 40);
  x.add(tube_key(2, 1), Rat(1));
  x.add(tube_key(0, 2), Rat(3));
  GTSeries glued = series_star(x, x, add);

  // Only equal-degree necks pair, and the outer slots pass through unchanged.
  auto outer = [&](int chi, int total, int k0, int k1) {
    GTKey key;
    key.chi = chi;
    key.degree = {total};
    key.contacts = {ContactTuple{k0}, ContactTuple{k1}};
    key.words = {word_pt(1), word_pt(1)};
    return key;
  };
  CHECK(glued.terms().size() == 2);
  CHECK(glued.coeff(outer(2, 2, 1, 1)) == Rat(1));
  CHECK(glued.coeff(outer(-2, 4, 2, 2)) == Rat(18));  // 3*3*<(2)>
}

TEST_CASE("exp of the empty series is the unit") {
  GTSeries zero = tube_series();
  GTSeries one = exp_truncated(zero);
  CHECK(one.terms().size() == 1);
  CHECK(one.coeff(zero.unit_key()) == Rat(1));
  CHECK(log_truncated(one).is_zero());
}

TEST_CASE("exp and log are truncated inverses on a nilpotent term") {
  GTSeries g = tube_series(3, 20);
  g.add(tube_key(2, 2), Rat(5, 7));  // square exceeds max_degree 3
  GTSeries e = exp_truncated(g);
  CHECK(e.terms().size() == 2);
  CHECK(e.coeff(g.unit_key()) == Rat(1));
  CHECK(e.coeff(tube_key(2, 2)) == Rat(5, 7));
  CHECK(log_truncated(e) == g);
}

TEST_CASE("exp rejects degree-zero keys, log requires a unit") {
  GTSeries g = tube_series();
  GTKey flat;
  flat.chi = 2;
  flat.degree = {0};
  flat.contacts = {ContactTuple{}, ContactTuple{}};
  flat.words = {word_pt(0), word_pt(0)};
  g.add(flat, Rat(1));
  CHECK_THROWS_AS(exp_truncated(g), std::domain_error);

  GTSeries h = tube_series();
  h.add(tube_key(2, 1), Rat(1));
  CHECK_THROWS_AS(log_truncated(h), std::domain_error);  // no unit term
  h.add(h.unit_key(), Rat(2));
  CHECK_THROWS_AS(log_truncated(h), std::domain_error);  // unit must be 1
}

TEST_CASE("disconnected assembly of the tube tables") {
  GTSeries gw = exp_gw_connected(3);
  CHECK(gw.coeff(tube_key(2, 1)) == Rat(1));
  CHECK(gw.coeff(tube_key(2, 2)) == Rat(1, 2));
  CHECK(gw.coeff(tube_key(2, 3)) == Rat(1, 3));

  GTSeries gt = exp_truncated(gw);
  // Two unordered degree-1 tubes: coefficient 1^2/2!.
  GTKey pair;
  pair.chi = 4;
  pair.degree = {2};
  pair.contacts = {ContactTuple{1, 1}, ContactTuple{1, 1}};
  pair.words = {word_pt(2), word_pt(2)};
  CHECK(gt.coeff(pair) == Rat(1, 2));

  // Three degree-1 tubes and a (1)+(2) mixed pair at total degree 3.
  GTKey triple;
  triple.chi = 6;
  triple.degree = {3};
  triple.contacts = {ContactTuple{1, 1, 1}, ContactTuple{1, 1, 1}};
  triple.words = {word_pt(3), word_pt(3)};
  CHECK(gt.coeff(triple) == Rat(1, 6));
  GTKey mixed;
  mixed.chi = 4;
  mixed.degree = {3};
  mixed.contacts = {ContactTuple{1, 2}, ContactTuple{1, 2}};
  mixed.words = {word_pt(2), word_pt(2)};
  CHECK(gt.coeff(mixed) == Rat(1, 2));
}

TEST_CASE("verification suites pass at reduced sizes") {
  CHECK(verify_exp_gw(4).ok());
  CHECK(verify_pairing(25).ok());
  CHECK(verify_round_trip(25).ok());
  CHECK(verify_shuffle_counts(5).ok());
}

TEST_CASE("series JSON form") {
  GTSeries s(&line_basis, 1, 1, 10, 10);
  GTKey key;
  key.chi = 2;
  key.degree = {1};
  key.contacts = {ContactTuple{1, 2}};
  key.words = {make_word(line_basis, {"pt", "L"})};
  s.add(key, Rat(-1, 3));

  auto j = series_to_json(s);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["chi"] == 2);
  CHECK(j[0]["degree"] == nlohmann::ordered_json::array({1}));
  CHECK(j[0]["contacts"][0] == nlohmann::ordered_json::array({1, 2}));
  CHECK(j[0]["words"][0][0] == "pt");
  CHECK(j[0]["words"][0][1] == "L");
  CHECK(j[0]["coeff"] == "-1/3");
}
