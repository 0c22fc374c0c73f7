#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "gtcomb/divisor.hpp"
#include "gtcomb/mult_index.hpp"
#include "gtcomb/rel_invariants.hpp"
#include "gtcomb/verify.hpp"

using namespace gtcomb;

namespace {

std::vector<ContactTuple> tuples_of_degree(int w) {
  std::vector<ContactTuple> out;
  for_each_multindex_of_weight(
      w, [&](const MultIndex& a) { out.push_back(to_contact_tuple(a)); });
  return out;
}

HomologyWord letters(const std::string& label, int len) {
  return make_word(DivisorBasis::line(),
                   std::vector<std::string>(len, label));
}

}  // namespace

TEST_CASE("relative dimension of covers of the cylinder") {
  CHECK(relative_p1_dimension(0, 1, {1}, {1}) == 0);
  CHECK(relative_p1_dimension(0, 3, {3}, {1, 1, 1}) == 2);
  CHECK(relative_p1_dimension(1, 2, {2}, {2}) == 2);
  CHECK(relative_p1_dimension(2, 5, {5}, {2, 3}) == 5);

  CHECK_THROWS_AS(relative_p1_dimension(0, 2, {1}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(relative_p1_dimension(0, 2, {2}, {3}), std::invalid_argument);
  CHECK_THROWS_AS(relative_p1_dimension(-1, 2, {2}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(relative_p1_dimension(0, 0, {}, {}), std::invalid_argument);
}

TEST_CASE("two-point table") {
  for (int d = 1; d <= 10; ++d)
    CHECK(p1_two_point(0, d, {d}, {d}) == Rat(1, d));

  CHECK(p1_two_point(1, 2, {2}, {2}) == 0);
  CHECK(p1_two_point(0, 2, {1, 1}, {2}) == 0);
  CHECK(p1_two_point(0, 3, {3}, {2, 1}) == 0);
  CHECK_THROWS_AS(p1_two_point(0, 3, {3}, {2}), std::invalid_argument);
}

TEST_CASE("one fixed simple branch point") {
  CHECK(p1_branch_point(0, 2, {2}, {1, 1}) == 1);
  CHECK(p1_branch_point(0, 2, {1, 1}, {2}) == 1);
  CHECK(p1_branch_point(0, 3, {3}, {2, 1}) == 1);
  CHECK(p1_branch_point(0, 3, {3}, {1, 2}) == 1);  // ordering is immaterial
  CHECK(p1_branch_point(0, 2, {2}, {2}) == 0);
  CHECK(p1_branch_point(0, 3, {3}, {1, 1, 1}) == 0);
  CHECK(p1_branch_point(0, 3, {2, 1}, {2, 1}) == 0);
  CHECK(p1_branch_point(1, 2, {2}, {1, 1}) == 0);
}

TEST_CASE("the closed forms are cut out by the dimension count") {
  // Those two tables are the dimension-0 and dimension-1 strata: over all
  // profiles the value is nonzero exactly when the count says it can be.
  for (int g = 0; g <= 2; ++g)
    for (int d = 1; d <= 5; ++d)
      for (const auto& s0 : tuples_of_degree(d))
        for (const auto& sinf : tuples_of_degree(d)) {
          const int dim = relative_p1_dimension(g, d, s0, sinf);
          CHECK((p1_two_point(g, d, s0, sinf) != 0) == (dim == 0));
          CHECK((p1_branch_point(g, d, s0, sinf) != 0) == (dim == 1));
        }
}

TEST_CASE("Hirzebruch class numerology") {
  FnDegree fiber{1, 0, 3};
  CHECK(fiber.dot_s0() == 3);
  CHECK(fiber.dot_sinf() == 3);
  CHECK(fiber.chern() == 6);

  FnDegree section{2, 1, 1};
  CHECK(section.dot_s0() == 3);
  CHECK(section.dot_sinf() == 1);
  CHECK(section.chern() == 6);

  FnDegree mixed{2, 3, 1};
  CHECK(mixed.dot_s0() == 7);
  CHECK(mixed.dot_sinf() == 1);
  CHECK(mixed.chern() == 14);
}

TEST_CASE("dimension gate") {
  CHECK(fn_dimension_allows(0, 0, 0, 0));
  CHECK(fn_dimension_allows(1, 0, 0, 0));
  CHECK_FALSE(fn_dimension_allows(2, 0, 0, 0));
  CHECK(fn_dimension_allows(0, 1, 2, 1));  // a point insertion saves a section
  CHECK_FALSE(fn_dimension_allows(1, 1, 2, 1));
  CHECK_FALSE(fn_dimension_allows(0, 2, 2, 1));
  CHECK(fn_dimension_allows(0, 1, 4, 2));
}

TEST_CASE("fiber covers with no constraint") {
  for (int n = 0; n <= 2; ++n)
    for (int b = 1; b <= 10; ++b) {
      TensorSum v = fn_no_constraint(FnDegree{n, 0, b}, 0, {b}, {b});
      REQUIRE(v.size() == 2);
      CHECK(v[0].s0_side == letters("L", 1));
      CHECK(v[0].sinf_side == letters("pt", 1));
      CHECK(v[0].coeff == Rat(1, b));
      CHECK(v[1].s0_side == letters("pt", 1));
      CHECK(v[1].sinf_side == letters("L", 1));
      CHECK(v[1].coeff == Rat(1, b));
    }

  // Everything off the fiber stratum is empty.
  CHECK(fn_no_constraint(FnDegree{0, 0, 2}, 1, {2}, {2}).empty());
  CHECK(fn_no_constraint(FnDegree{0, 0, 2}, 0, {1, 1}, {2}).empty());
  CHECK(fn_no_constraint(FnDegree{0, 0, 2}, 0, {2}, {1, 1}).empty());
  CHECK(fn_no_constraint(FnDegree{1, 1, 1}, 0, {1, 1}, {1}).empty());
  CHECK(fn_no_constraint(FnDegree{0, 0, 0}, 0, {}, {}).empty());

  CHECK_THROWS_AS(fn_no_constraint(FnDegree{0, 0, 2}, 0, {1}, {2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fn_no_constraint(FnDegree{0, 0, 2}, -1, {2}, {2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fn_no_constraint(FnDegree{-1, 0, 2}, 0, {2}, {2}),
                  std::invalid_argument);
}

TEST_CASE("one point insertion") {
  // Fiber case: the point pins everything.
  for (int b = 1; b <= 6; ++b) {
    TensorSum v = fn_point_insertion(FnDegree{1, 0, b}, 0, {b}, {b});
    REQUIRE(v.size() == 1);
    CHECK(v[0].s0_side == letters("pt", 1));
    CHECK(v[0].sinf_side == letters("pt", 1));
    CHECK(v[0].coeff == 1);
  }

  // Section case: the contact points roam, so the word is fundamental.
  TensorSum s = fn_point_insertion(FnDegree{1, 1, 2}, 0, {1, 1, 1}, {2});
  REQUIRE(s.size() == 1);
  CHECK(s[0].s0_side == letters("L", 3));
  CHECK(s[0].sinf_side == letters("L", 1));
  CHECK(s[0].coeff == 1);

  TensorSum s2 = fn_point_insertion(FnDegree{0, 1, 0}, 0, {}, {});
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].s0_side == letters("L", 0));
  CHECK(s2[0].sinf_side == letters("L", 0));

  CHECK(fn_point_insertion(FnDegree{0, 0, 2}, 1, {2}, {2}).empty());
  CHECK(fn_point_insertion(FnDegree{0, 1, 1}, 1, {1}, {1}).empty());
  CHECK(fn_point_insertion(FnDegree{0, 2, 0}, 0, {}, {}).empty());
  CHECK_THROWS_AS(fn_point_insertion(FnDegree{2, 1, 1}, 0, {1, 1}, {1}),
                  std::invalid_argument);
}

TEST_CASE("nonzero values pass the gate, and word lengths track the tuples") {
  for (int n = 0; n <= 2; ++n)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int g = 0; g <= 2; ++g) {
          FnDegree A{n, a, b};
          if (A.dot_s0() > 6) continue;
          for (const auto& s0 : tuples_of_degree(A.dot_s0()))
            for (const auto& sinf : tuples_of_degree(A.dot_sinf())) {
              TensorSum nc = fn_no_constraint(A, g, s0, sinf);
              if (!nc.empty()) CHECK(fn_dimension_allows(g, a, 0, 0));
              TensorSum pi = fn_point_insertion(A, g, s0, sinf);
              if (!pi.empty()) CHECK(fn_dimension_allows(g, a, 2, 1));
              for (const auto& term : pi) {
                CHECK(static_cast<int>(term.s0_side.letters.size()) ==
                      s0.length());
                CHECK(static_cast<int>(term.sinf_side.letters.size()) ==
                      sinf.length());
              }
            }
        }
}

TEST_CASE("vanishing suite at reduced size") {
  CHECK(verify_dimension_vanishing(4, 2).ok());
}
