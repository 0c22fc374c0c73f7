#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "gtcomb/hurwitz.hpp"
#include "gtcomb/mult_index.hpp"

using namespace gtcomb;

namespace {

MultIndex e(int k, int m = 1) {
  MultIndex a;
  a.set(k, m);
  return a;
}

HurwitzKey key(int d, int g, MultIndex alpha) {
  return HurwitzKey{d, g, std::move(alpha)};
}

Int denom(const Rat& r) { return boost::multiprecision::denominator(r); }

}  // namespace

TEST_CASE("branch point counts") {
  CHECK(hurwitz_branch_count(key(1, 0, e(1))) == 0);
  CHECK(hurwitz_branch_count(key(2, 0, e(2))) == 1);
  CHECK(hurwitz_branch_count(key(2, 0, e(1, 2))) == 2);
  CHECK(hurwitz_branch_count(key(3, 1, e(1, 3))) == 6);
  CHECK(hurwitz_branch_count(key(5, 2, e(2) + e(3))) == 9);
}

TEST_CASE("recursion equals the monodromy count for every small key") {
  // Pin both conventions to each other across all of d <= 3 before trusting
  // either one in wider sweeps.
  HurwitzTable table;
  int checked = 0;
  for (int d = 1; d <= 3; ++d)
    for (int g = 0; g <= 3; ++g)
      for_each_multindex_of_weight(d, [&](const MultIndex& alpha) {
        HurwitzKey k = key(d, g, alpha);
        if (hurwitz_branch_count(k) > 8) return;
        CHECK(table.number(k) == monodromy_oracle(k));
        ++checked;
      });
  CHECK(checked >= 12);
}

TEST_CASE("classical values") {
  HurwitzTable table;
  // d <= 2.
  CHECK(table.number(key(1, 0, e(1))) == 1);
  CHECK(table.number(key(1, 1, e(1))) == 0);
  CHECK(table.number(key(2, 0, e(2))) == Rat(1, 2));
  CHECK(table.number(key(2, 0, e(1, 2))) == Rat(1, 2));
  CHECK(table.number(key(2, 1, e(2))) == Rat(1, 2));
  CHECK(table.number(key(2, 1, e(1, 2))) == Rat(1, 2));
  // d = 3, genus 0 and 1.
  CHECK(table.number(key(3, 0, e(3))) == 1);
  CHECK(table.number(key(3, 0, e(1) + e(2))) == 4);
  CHECK(table.number(key(3, 0, e(1, 3))) == 4);
  CHECK(table.number(key(3, 1, e(3))) == 9);
  CHECK(table.number(key(3, 1, e(1) + e(2))) == 40);
  CHECK(table.number(key(3, 1, e(1, 3))) == 40);
  // Unramified profiles, higher degree: (2d-2)! d^{d-3} / d!.
  CHECK(table.number(key(4, 0, e(1, 4))) == 120);
  CHECK(table.number(key(5, 0, e(1, 5))) == 8400);

  // Off-support keys are zero, not errors.
  CHECK(table.number(key(0, 0, MultIndex{})) == 0);
  CHECK(table.number(key(2, 0, e(1))) == 0);
  CHECK(table.number(key(2, -1, e(1, 2))) == 0);
}

TEST_CASE("the three summands split the value") {
  HurwitzTable table;

  // r = 0: nothing to recurse on.
  HurwitzTable::Parts base = table.parts(key(1, 0, e(1)));
  CHECK(base.cut == 0);
  CHECK(base.join_connected == 0);
  CHECK(base.join_split == 0);

  // Each of these keys feeds through exactly one channel.
  HurwitzTable::Parts cut_only = table.parts(key(3, 0, e(1, 3)));
  CHECK(cut_only.cut == 4);
  CHECK(cut_only.join_connected == 0);
  CHECK(cut_only.join_split == 0);

  HurwitzTable::Parts conn_only = table.parts(key(2, 1, e(2)));
  CHECK(conn_only.cut == 0);
  CHECK(conn_only.join_connected == Rat(1, 2));
  CHECK(conn_only.join_split == 0);

  HurwitzTable::Parts split_only = table.parts(key(2, 0, e(2)));
  CHECK(split_only.cut == 0);
  CHECK(split_only.join_connected == 0);
  CHECK(split_only.join_split == Rat(1, 2));

  // And whenever there is a branch point to move, they sum to the number.
  for (int d = 1; d <= 4; ++d)
    for (int g = 0; g <= 2; ++g)
      for_each_multindex_of_weight(d, [&](const MultIndex& alpha) {
        HurwitzKey k = key(d, g, alpha);
        if (hurwitz_branch_count(k) == 0) return;
        CHECK(table.parts(k).total() == table.number(k));
      });
}

TEST_CASE("d! clears every denominator") {
  HurwitzTable table;
  for (int d = 1; d <= 5; ++d) {
    const Int df = factorial(d);
    for (int g = 0; g <= 2; ++g)
      for_each_multindex_of_weight(d, [&](const MultIndex& alpha) {
        Rat scaled = Rat(df) * table.number(key(d, g, alpha));
        CHECK(denom(scaled) == 1);
      });
  }
}

TEST_CASE("generating coefficients divide by r!") {
  HurwitzTable table;
  CHECK(generating_coefficient(table, key(3, 1, e(1) + e(2))) == Rat(1, 3));
  CHECK(generating_coefficient(table, key(2, 0, e(1, 2))) == Rat(1, 4));
  CHECK(generating_coefficient(table, key(1, 0, e(1))) == 1);
}

TEST_CASE("recursion depth stays within the branch count") {
  HurwitzTable fresh;
  HurwitzKey k = key(3, 1, e(1, 3));  // r = 6
  fresh.number(k);
  CHECK(fresh.max_depth() >= 1);
  CHECK(fresh.max_depth() <= hurwitz_branch_count(k) + 1);
}

TEST_CASE("oracle guards its resource bounds") {
  CHECK(monodromy_oracle(key(3, 0, e(1) + e(2))) == 4);
  CHECK(monodromy_oracle(key(4, 0, e(1, 4)), OracleLimits{4, 6}) == 120);

  CHECK_THROWS_AS(monodromy_oracle(key(7, 0, e(1, 7))), limit_error);
  CHECK_THROWS_AS(monodromy_oracle(key(3, 3, e(1, 3))), limit_error);  // r = 10
  CHECK_THROWS_AS(monodromy_oracle(key(2, 0, e(1, 2)), OracleLimits{9, 8}),
                  std::invalid_argument);
  CHECK_THROWS_AS(monodromy_oracle(key(2, 0, e(1, 2)), OracleLimits{6, 13}),
                  std::invalid_argument);
  CHECK_THROWS_AS(monodromy_oracle(key(2, 0, e(1))), std::invalid_argument);
  CHECK_THROWS_AS(monodromy_oracle(key(0, 0, MultIndex{})),
                  std::invalid_argument);
}

TEST_CASE("itemized cut-and-join report") {
  HurwitzTable table;
  CutJoinReport rep = verify_cut_and_join(table, 3, 1, OracleLimits{3, 8});
  CHECK(rep.all_ok);
  CHECK(!rep.first_mismatch.has_value());
  REQUIRE(rep.rows.size() == 12);
  const Rat expected[] = {1,        0,        Rat(1, 2), Rat(1, 2),
                          Rat(1, 2), Rat(1, 2), 1,         4,
                          4,        9,        40,        40};
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const CutJoinRow& row = rep.rows[i];
    CHECK(row.ok);
    CHECK(row.value == expected[i]);
    CHECK(row.value == row.oracle);
    CHECK(row.parts.total() == (row.r == 0 ? Rat(0) : row.value));
    CHECK(row.r == hurwitz_branch_count(row.key));
    CHECK(row.r <= 8);
  }
}
