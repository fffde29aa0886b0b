#include <doctest.h>

#include <algorithm>
#include <string>

#include "fewnomial/blocks.hpp"
#include "fewnomial/system.hpp"
#include "helpers.hpp"

using namespace fewnomial;
using fewnomial::testing::term;
using fewnomial::testing::upoly;

TEST_CASE("builtin blocks have the promised shape") {
  for (std::size_t m : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
    CAPTURE(m);
    const BlockRecipe& block = builtin_block(m);
    CHECK(block.m == m);
    CHECK(block.expected_count == m + 1);
    CHECK(block.system.is_square());
    CHECK(block.system.arity() == m);
    CHECK(support(block.system).size() == m + 2);
    CHECK(block.schedule.size() == m - 1);
    CHECK(block.eliminant.degree() >= static_cast<int>(m + 1));
  }
}

TEST_CASE("builtin eliminants match their closed forms") {
  CHECK(builtin_block(1).eliminant == upoly({"2", "-3", "1"}));
  CHECK(builtin_block(2).eliminant == upoly({"-1", "4", "-4", "1"}));
  const auto& quartic = builtin_block(3).eliminant;
  CHECK(quartic == upoly({"2", "-55", "442", "-880", "440"}));
  // The same polynomial in monic form: x^4 - 2x^3 + (221/220)x^2 - x/8 + 1/220.
  CHECK(quartic.monic() == upoly({"1/220", "-1/8", "221/220", "-2", "1"}));
}

TEST_CASE("no builtin block beyond dimension three") {
  CHECK_THROWS_WITH_AS(builtin_block(4), doctest::Contains("register_block"),
                       UnsupportedBlockError);
  CHECK_THROWS_AS(builtin_block(0), UnsupportedBlockError);
}

TEST_CASE("default registry carries the builtins") {
  auto& registry = default_registry();
  CHECK(registry.has_dimension(1));
  CHECK(registry.has_dimension(2));
  CHECK(registry.has_dimension(3));
  CHECK_FALSE(registry.has_dimension(4));
  CHECK(registry.by_id("m2").m == 2);
  CHECK(registry.by_dimension(3).id == "m3");
  const auto ids = registry.ids();
  CHECK(std::count(ids.begin(), ids.end(), "m1") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "m2") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "m3") == 1);
}

TEST_CASE("eliminate recomputes the stored eliminant") {
  for (std::size_t m : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
    CAPTURE(m);
    const BlockRecipe& block = builtin_block(m);
    CHECK(eliminate(block) == block.eliminant);
  }
}

TEST_CASE("eliminate rejects broken schedules") {
  SUBCASE("wrong schedule length") {
    BlockRecipe recipe = builtin_block(2);
    recipe.schedule.clear();
    CHECK_THROWS_WITH_AS(eliminate(recipe), doctest::Contains("schedule"),
                         MalformedRecipeError);
  }
  SUBCASE("zero denominator") {
    BlockRecipe recipe = builtin_block(2);
    recipe.schedule[0].denominator.coefficient = 0;
    CHECK_THROWS_WITH_AS(eliminate(recipe), doctest::Contains("zero denominator"),
                         MalformedRecipeError);
  }
  SUBCASE("step that does not solve its equation") {
    BlockRecipe recipe = builtin_block(2);
    recipe.schedule[0].numerator =
        recipe.schedule[0].numerator + SparsePolynomial::constant(2, Rational(1));
    CHECK_THROWS_WITH_AS(eliminate(recipe),
                         doctest::Contains("does not solve its source equation"),
                         MalformedRecipeError);
  }
  SUBCASE("equation index out of range") {
    BlockRecipe recipe = builtin_block(2);
    recipe.schedule[0].equation = 5;
    CHECK_THROWS_AS(eliminate(recipe), MalformedRecipeError);
  }
  SUBCASE("eliminating the principal variable") {
    BlockRecipe recipe = builtin_block(2);
    recipe.schedule[0].variable = recipe.principal_variable;
    CHECK_THROWS_AS(eliminate(recipe), MalformedRecipeError);
  }
  SUBCASE("substitution mentioning its own variable") {
    BlockRecipe recipe = builtin_block(2);
    recipe.schedule[0].numerator =
        recipe.schedule[0].numerator + SparsePolynomial(2, {term("1", {0, 1})});
    CHECK_THROWS_AS(eliminate(recipe), MalformedRecipeError);
  }
}

TEST_CASE("registration verifies the monomial census") {
  BlockRegistry registry;
  BlockRecipe recipe = builtin_block(2);
  recipe.id = "bloated";
  // An extra x^3 monomial pushes the support to m+3.
  auto polys = recipe.system.polynomials();
  polys[0] = polys[0] + SparsePolynomial(2, {term("1", {3, 0})});
  recipe.system = SparseSystem(recipe.system.variables(), polys);
  CHECK_THROWS_WITH_AS(registry.register_block(recipe),
                       doctest::Contains("monomial census"), BlockRejectedError);
}

TEST_CASE("registration rejects a count above the attainable maximum") {
  BlockRegistry registry;
  BlockRecipe recipe = builtin_block(2);
  recipe.id = "greedy";
  recipe.expected_count = 4;  // m+2 claimed, m+1 attainable
  CHECK_THROWS_WITH_AS(registry.register_block(recipe),
                       doctest::Contains("maximum"), BlockRejectedError);
}

TEST_CASE("registration rejects a wrong eliminant") {
  BlockRegistry registry;
  BlockRecipe recipe = builtin_block(2);
  recipe.id = "forged";
  recipe.eliminant = upoly({"2", "-3", "1", "1"});
  CHECK_THROWS_AS(registry.register_block(recipe), BlockRejectedError);
}

TEST_CASE("registration rejects structural mistakes") {
  BlockRegistry registry;
  SUBCASE("empty id") {
    BlockRecipe recipe = builtin_block(1);
    recipe.id.clear();
    CHECK_THROWS_AS(registry.register_block(recipe), BlockRejectedError);
  }
  SUBCASE("principal variable out of range") {
    BlockRecipe recipe = builtin_block(1);
    recipe.id = "astray";
    recipe.principal_variable = 9;
    CHECK_THROWS_AS(registry.register_block(recipe), BlockRejectedError);
  }
}

TEST_CASE("registry is append-only per id") {
  BlockRegistry registry;
  BlockRecipe first = builtin_block(1);
  first.id = "dup";
  CHECK(registry.register_block(first) == "dup");
  // Identical re-registration is a no-op.
  CHECK(registry.register_block(first) == "dup");
  CHECK(registry.ids().size() == 1);
  // A different recipe under the same id is a conflict.
  BlockRecipe second = builtin_block(2);
  second.id = "dup";
  CHECK_THROWS_WITH_AS(registry.register_block(second),
                       doctest::Contains("already registered"), BlockRejectedError);
}

TEST_CASE("empty registry lookups point at register_block") {
  const BlockRegistry registry;
  CHECK_FALSE(registry.has_dimension(1));
  CHECK_THROWS_WITH_AS(registry.by_dimension(1), doctest::Contains("register_block"),
                       UnsupportedBlockError);
  CHECK_THROWS_AS(registry.by_id("m1"), UnsupportedBlockError);
}
