#include <doctest.h>

#include <utility>
#include <vector>

#include "fewnomial/blocks.hpp"
#include "fewnomial/construct.hpp"
#include "fewnomial/system.hpp"
#include "helpers.hpp"

using namespace fewnomial;
using fewnomial::testing::term;

TEST_CASE("predicted_count is floor((n+k)/k)^k") {
  CHECK(predicted_count(2, 1) == 3);
  CHECK(predicted_count(5, 2) == 9);
  CHECK(predicted_count(7, 3) == 27);
  CHECK(predicted_count(9, 3) == 64);
  CHECK(predicted_count(3, 3) == 8);
  CHECK(predicted_count(12, 6) == 729);
  CHECK(predicted_count(50, 1) == 51);
}

TEST_CASE("predicted_count equals (m+1)^k with m = floor(n/k)") {
  for (std::size_t n = 1; n <= 50; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const Integer m(n / k);
      CHECK(predicted_count(n, k) == integer_pow(m + 1, static_cast<unsigned>(k)));
    }
  }
}

TEST_CASE("predicted_count rejects out-of-range input") {
  CHECK_THROWS_AS(predicted_count(0, 1), DomainError);
  CHECK_THROWS_AS(predicted_count(1, 0), DomainError);
  CHECK_THROWS_AS(predicted_count(2, 3), DomainError);
}

TEST_CASE("plan splits n into k blocks plus slack") {
  const auto p21 = plan(2, 1);
  CHECK(p21.n == 2);
  CHECK(p21.k == 1);
  CHECK(p21.m == 2);
  CHECK(p21.j == 0);
  CHECK(p21.block_ids == std::vector<std::string>{"m2"});
  CHECK(p21.predicted == 3);
  CHECK_FALSE(p21.outside_theorem_range);
  REQUIRE(p21.variable_layout.size() == 2);
  CHECK(p21.variable_layout[0] == std::pair<std::string, std::string>{"b1.x", "x1"});
  CHECK(p21.variable_layout[1] == std::pair<std::string, std::string>{"b1.y", "x2"});

  const auto p73 = plan(7, 3);
  CHECK(p73.m == 2);
  CHECK(p73.j == 1);
  CHECK(p73.block_ids.size() == 3);
  CHECK(p73.predicted == 27);
  REQUIRE(p73.variable_layout.size() == 7);
  CHECK(p73.variable_layout.back() ==
        std::pair<std::string, std::string>{"slack1", "x7"});

  const auto p52 = plan(5, 2);
  CHECK(p52.m == 2);
  CHECK(p52.j == 1);
  CHECK(p52.predicted == 9);
}

TEST_CASE("plan flags the n = k edge of the counting theorem") {
  CHECK(plan(3, 3).outside_theorem_range);
  CHECK(plan(3, 3).m == 1);
  CHECK_FALSE(plan(4, 3).outside_theorem_range);
}

TEST_CASE("plan rejects bad dimensions") {
  CHECK_THROWS_AS(plan(0, 1), DomainError);
  CHECK_THROWS_AS(plan(1, 0), DomainError);
  CHECK_THROWS_AS(plan(1, 2), DomainError);
  // floor(8/2) = 4 needs a four-dimensional block, which nothing registers.
  CHECK_THROWS_AS(plan(8, 2), UnsupportedBlockError);
}

TEST_CASE("plan accepts and validates block overrides") {
  const auto p = plan(4, 2, {"m2", "m2"});
  CHECK(p.block_ids == std::vector<std::string>{"m2", "m2"});
  CHECK_THROWS_AS(plan(4, 2, {"m2"}), DomainError);             // wrong count
  CHECK_THROWS_AS(plan(4, 2, {"m1", "m1"}), DomainError);       // wrong dimension
  CHECK_THROWS_AS(plan(4, 2, {"m2", "nope"}), UnsupportedBlockError);
}

TEST_CASE("assemble of a single block is that block renamed") {
  const auto assembled = assemble(plan(2, 1));
  const SparseSystem expected({"x1", "x2"}, builtin_block(2).system.polynomials());
  CHECK(assembled == expected);
  REQUIRE(assembled.plan() != nullptr);
  CHECK(assembled.plan()->predicted == 3);
}

TEST_CASE("assemble places blocks on disjoint variables and appends slacks") {
  const auto assembled = assemble(plan(3, 2));
  REQUIRE(assembled.arity() == 3);
  REQUIRE(assembled.size() == 3);
  CHECK(assembled.variables() == std::vector<std::string>{"x1", "x2", "x3"});
  // Two one-variable blocks x_i^2 - 3x_i + 2 plus the slack x3 - 1.
  const SparsePolynomial block1(
      3, {term("1", {2, 0, 0}), term("-3", {1, 0, 0}), term("2", {0, 0, 0})});
  const SparsePolynomial block2(
      3, {term("1", {0, 2, 0}), term("-3", {0, 1, 0}), term("2", {0, 0, 0})});
  const SparsePolynomial slack(3, {term("1", {0, 0, 1}), term("-1", {0, 0, 0})});
  CHECK(assembled.polynomials()[0] == block1);
  CHECK(assembled.polynomials()[1] == block2);
  CHECK(assembled.polynomials()[2] == slack);
}

TEST_CASE("census counts monomials and their affine span") {
  CHECK(census(assemble(plan(4, 2))) == std::pair<std::size_t, std::size_t>{7, 4});
  CHECK(census(assemble(plan(5, 2))) == std::pair<std::size_t, std::size_t>{8, 5});
  CHECK(census(assemble(plan(7, 3))) == std::pair<std::size_t, std::size_t>{11, 7});
  CHECK(census(assemble(plan(9, 3))) == std::pair<std::size_t, std::size_t>{13, 9});

  const SparseSystem constant({"x"}, {SparsePolynomial::constant(1, Rational(2))});
  CHECK(census(constant) == std::pair<std::size_t, std::size_t>{1, 0});
}

TEST_CASE("every assembled system hits the n+k+1 monomial budget") {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t n = k; n <= 9; ++n) {
      if (n / k > 3) continue;
      CAPTURE(n);
      CAPTURE(k);
      const auto [monomials, span] = census(assemble(plan(n, k)));
      CHECK(monomials == n + k + 1);
      CHECK(span == n);
    }
  }
}
