#include <doctest.h>

#include "deltanil/alpha.hpp"
#include "deltanil/fuzz.hpp"

using namespace deltanil;

namespace {
const GroupType kLong = validate(3, {3, 5, 6, 8, 10}, {});
}

TEST_CASE("alpha initial step") {
  // only the (s,s) cell moves at t = 1
  CHECK(alpha(kLong, 4, 4, 1) == 1);
  CHECK(alpha(kLong, 0, 0, 1) == 0);
  CHECK(alpha(kLong, 4, 3, 1) == 0);
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 5; ++j) CHECK(alpha(kLong, i, j, 0) == 0);
}

TEST_CASE("alpha worked values") {
  CHECK(alpha(kLong, 4, 3, 2) == 1);   // second step reaches (s, s-1)
  CHECK(alpha(kLong, 3, 4, 2) == 1);
  CHECK(alpha(kLong, 4, 4, 2) == 2);
  CHECK(alpha(kLong, 0, 4, 14) == 3);  // saturated corner: n_1
  CHECK(AlphaTable(kLong).saturation_step() == 14);
}

TEST_CASE("alpha clamps at the radical depth") {
  AlphaTable table(kLong);
  for (Index i = 0; i < 5; ++i) {
    for (Index j = 0; j < 5; ++j) {
      CHECK(table.value(i, j, 14) == table.depth()(i, j));
      CHECK(table.value(i, j, 99) == table.depth()(i, j));
    }
  }
}

TEST_CASE("zero radical saturates immediately") {
  AlphaTable table(validate(2, {1}, {3}));
  CHECK(table.saturation_step() == 0);
}

TEST_CASE("closed form, minimum gap >= 2") {
  const GroupType g = validate(3, {2, 4, 7}, {});
  CHECK(closed_form_case1(g, 1, 2, 4) == 3);
  CHECK(closed_form_case1(g, 0, 0, 1) == 0);
  CHECK(closed_form_case1(g, 2, 2, 6) == 6);
  CHECK_THROWS_AS(closed_form_case1(kLong, 0, 0, 1), CaseNotApplicable);
  CHECK_THROWS_AS(closed_form_case1(validate(3, {2}, {}), 0, 0, 1),
                  CaseNotApplicable);
}

TEST_CASE("closed form, top gap 1") {
  const GroupType g = validate(3, {1, 2}, {});
  CHECK(closed_form_case2(g, 1, 1, 1) == 1);
  CHECK(closed_form_case2(g, 0, 1, 2) == 1);
  CHECK(closed_form_case2(g, 0, 0, 0) == 0);
  CHECK_THROWS_AS(closed_form_case2(kLong, 0, 0, 1), CaseNotApplicable);
  CHECK_THROWS_AS(closed_form_case2(validate(3, {2, 4}, {}), 0, 0, 1),
                  CaseNotApplicable);
}

TEST_CASE("closed forms match the recursion everywhere") {
  Rng rng(7);
  for (int k = 0; k < 25; ++k) {
    const GroupType g1 = random_group_type_min_gap2(rng);
    AlphaTable t1(g1);
    for (int t = 0; t <= t1.saturation_step(); ++t)
      for (Index i = 0; i < g1.blocks(); ++i)
        for (Index j = 0; j < g1.blocks(); ++j)
          CHECK(closed_form_case1(g1, i, j, t) == t1.value(i, j, t));
    const GroupType g2 = random_group_type_case2(rng);
    AlphaTable t2(g2);
    for (int t = 0; t <= t2.saturation_step(); ++t)
      for (Index i = 0; i < g2.blocks(); ++i)
        for (Index j = 0; j < g2.blocks(); ++j)
          CHECK(closed_form_case2(g2, i, j, t) == t2.value(i, j, t));
  }
}

namespace {
std::vector<ExpGrid> alpha_steps(const GroupType& g) {
  AlphaTable table(g);
  return {table.slices().begin() + 1, table.slices().end()};
}
}  // namespace

TEST_CASE("alpha tables are annihilating functions") {
  CHECK_FALSE(check_annihilating_function(kLong, alpha_steps(kLong)).has_value());
  Rng rng(11);
  for (int k = 0; k < 30; ++k) {
    const GroupType g = random_group_type(rng);
    if (AlphaTable(g).saturation_step() == 0) continue;
    CHECK_FALSE(check_annihilating_function(g, alpha_steps(g)).has_value());
  }
}

TEST_CASE("condition checker cites the broken condition") {
  auto steps = alpha_steps(kLong);

  SUBCASE("a +2 jump breaks the one-step growth bound") {
    steps[1](0, 0) += 2;
    const auto v = check_annihilating_function(kLong, steps);
    REQUIRE(v.has_value());
    CHECK(v->condition == 2);
    CHECK(v->i == 0);
    CHECK(v->j == 0);
    CHECK(v->t == 2);
  }

  SUBCASE("a wrong initial grid breaks condition 1") {
    steps[0](4, 4) = 0;
    const auto v = check_annihilating_function(kLong, steps);
    REQUIRE(v.has_value());
    CHECK(v->condition == 1);
    CHECK(v->t == 1);
  }
}

TEST_CASE("monotonicity toward the last block") {
  // The grids grow toward (s,s) in both indices; the first step already
  // shows it, since only the (s,s) cell is nonzero there.
  Rng rng(13);
  for (int k = 0; k < 30; ++k) {
    const GroupType g = random_group_type(rng);
    AlphaTable table(g);
    const Index s = g.blocks();
    for (int t = 0; t <= table.saturation_step(); ++t) {
      for (Index i = 0; i < s; ++i) {
        for (Index j = 0; j < s; ++j) {
          if (i + 1 < s) CHECK(table.value(i, j, t) <= table.value(i + 1, j, t));
          if (j + 1 < s) CHECK(table.value(i, j, t) <= table.value(i, j + 1, t));
          CHECK(table.value(i, j, t) <= table.value(i, j, t + 1));
          CHECK(table.value(i, j, t + 1) <= table.value(i, j, t) + 1);
          if (j + 1 < s) {
            CHECK(g.exponent(j) - table.value(j, j, t) <=
                  g.exponent(s - 1) - table.value(s - 1, s - 1, t));
          }
        }
      }
    }
  }
}
