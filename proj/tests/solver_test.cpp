#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "fewnomial/blocks.hpp"
#include "fewnomial/construct.hpp"
#include "fewnomial/solver.hpp"
#include "helpers.hpp"
#include "root_count_oracle.hpp"

using namespace fewnomial;
using fewnomial::testing::near;
using fewnomial::testing::term;
using fewnomial::testing::upoly;

TEST_CASE("sturm_positive_count on known polynomials") {
  CHECK(sturm_positive_count(upoly({"2", "-3", "1"})) == 2);
  CHECK(sturm_positive_count(upoly({"-1", "4", "-4", "1"})) == 3);
  CHECK(sturm_positive_count(upoly({"2", "-55", "442", "-880", "440"})) == 4);
  // Any positive scalar multiple has the same roots.
  CHECK(sturm_positive_count(upoly({"8", "-220", "1768", "-3520", "1760"})) == 4);
  CHECK(sturm_positive_count(upoly({"1", "0", "1"})) == 0);      // x^2 + 1
  CHECK(sturm_positive_count(upoly({"2", "3", "1"})) == 0);      // roots -1, -2
  CHECK(sturm_positive_count(upoly({"0", "0", "1"})) == 0);      // double root at 0
  CHECK(sturm_positive_count(upoly({"1", "-2", "1"})) == 1);     // (x-1)^2, distinct
  CHECK(sturm_positive_count(upoly({"7"})) == 0);
  CHECK_THROWS_AS(sturm_positive_count(UnivariatePolynomial()), DomainError);
}

TEST_CASE("isolate_positive_roots returns one interval per root") {
  const auto p = upoly({"1", "-3", "1"});  // roots (3 +- sqrt 5)/2
  const auto intervals = isolate_positive_roots(p);
  REQUIRE(intervals.size() == 2);
  for (const auto& interval : intervals) {
    CHECK(interval.lo > 0);
    CHECK(interval.lo < interval.hi);
    CHECK(interval.sign_change);
    // Endpoints are never roots.
    CHECK(p.evaluate(interval.lo) != 0);
    CHECK(p.evaluate(interval.hi) != 0);
  }
  CHECK(intervals[0].hi <= intervals[1].lo);

  CHECK(isolate_positive_roots(upoly({"1", "0", "1"})).empty());
  CHECK(isolate_positive_roots(upoly({"2", "-55", "442", "-880", "440"})).size() == 4);
}

TEST_CASE("refine_root finds rational roots exactly") {
  const auto p = upoly({"2", "-3", "1"});
  const auto intervals = isolate_positive_roots(p);
  REQUIRE(intervals.size() == 2);
  const auto first = refine_root(p, intervals[0], 50);
  const auto second = refine_root(p, intervals[1], 50);
  REQUIRE(first.exact.has_value());
  REQUIRE(second.exact.has_value());
  CHECK(*first.exact == 1);
  CHECK(*second.exact == 2);
  CHECK(first.value == 1);
  CHECK(second.value == 2);
}

TEST_CASE("refine_root meets the residual contract at any precision") {
  const auto p = upoly({"-1", "4", "-4", "1"});
  const auto intervals = isolate_positive_roots(p);
  REQUIRE(intervals.size() == 3);

  // Golden values: the roots are 1 and (3 +- sqrt 5)/2.
  const char* goldens[3] = {
      "0.38196601125010515179541316563436188227969082019424",
      "1",
      "2.6180339887498948482045868343656381177203091798058",
  };
  for (std::size_t i = 0; i < 3; ++i) {
    CAPTURE(i);
    PrecisionScope scope(50);
    const auto root = refine_root(p, intervals[i], 50);
    CHECK(near(root.value, goldens[i], "1e-45"));
    CHECK(abs(p.evaluate(root.value)) < Real("1e-46"));
  }

  // Higher precision only sharpens the value.
  PrecisionScope scope(100);
  const auto wide = refine_root(p, intervals[0], 100);
  PrecisionScope back(50);
  const auto narrow = refine_root(p, intervals[0], 50);
  CHECK(abs(round_to_digits(wide.value, 50) - narrow.value) < Real("1e-44"));
}

TEST_CASE("refine_root rejects a useless interval") {
  CHECK_THROWS_AS(refine_root(upoly({"5"}), IsolatingInterval{Rational(1), Rational(2), false}, 50),
                  DomainError);
}

TEST_CASE("certify evaluates residual, Jacobian, and positivity") {
  PrecisionScope scope(50);
  const auto system = fewnomial::testing::example_system_2var();

  const auto good = certify(system, {Real(1), Real(5)}, 50);
  CHECK(good.residual_norm == 0);
  CHECK(abs(good.jacobian_det + 1) < Real("1e-45"));
  CHECK(good.nondegenerate);
  CHECK(good.positive);

  // (1, 1) misses both equations by exactly 4.
  const auto off = certify(system, {Real(1), Real(1)}, 50);
  CHECK(off.residual_norm == 4);
  CHECK(off.positive);

  const auto outside = certify(system, {Real(1), Real(-1)}, 50);
  CHECK_FALSE(outside.positive);

  CHECK_THROWS_AS(certify(system, {Real(1)}, 50), ShapeError);
}

TEST_CASE("solve_block m=1 returns the exact pair") {
  const auto set = solve_block(builtin_block(1), 50);
  CHECK(set.count_claimed == 2);
  REQUIRE(set.solutions.size() == 2);
  CHECK(set.solutions[0].coordinates[0] == 1);
  CHECK(set.solutions[1].coordinates[0] == 2);
  CHECK(set.solutions[0].jacobian_det == -1);
  CHECK(set.solutions[1].jacobian_det == 1);
  CHECK(set.solutions[0].working_precision == 50);
}

TEST_CASE("solve_block m=2 reproduces the printed solutions") {
  const auto set = solve_block(builtin_block(2), 50);
  CHECK(set.count_claimed == 3);
  REQUIRE(set.solutions.size() == 3);
  // Ordered by increasing principal coordinate.
  const double expected[3][2] = {
      {0.381966, 10.854102}, {1.0, 5.0}, {2.618034, 4.145898}};
  for (std::size_t i = 0; i < 3; ++i) {
    CAPTURE(i);
    CHECK(near(set.solutions[i].coordinates[0], expected[i][0], 1e-4));
    CHECK(near(set.solutions[i].coordinates[1], expected[i][1], 1e-4));
  }
  // The middle solution is exactly (1, 5).
  CHECK(set.solutions[1].coordinates[0] == 1);
  CHECK(set.solutions[1].coordinates[1] == 5);
  CHECK(set.solutions[1].residual_norm == 0);
  CHECK(near(set.solutions[0].jacobian_det, 0.5278640450, 1e-8));
  CHECK(near(set.solutions[2].jacobian_det, 9.4721359550, 1e-8));
}

TEST_CASE("solve_block m=3 reproduces the printed triples") {
  const auto set = solve_block(builtin_block(3), 50);
  CHECK(set.count_claimed == 4);
  REQUIRE(set.solutions.size() == 4);
  const double expected[4][3] = {
      {0.076645, 0.1359, 1.00587},
      {0.084513, 0.13829, 1.00714},
      {0.54046, 0.54887, 1.2921},
      {1.29838, 1.30188, 2.6858},
  };
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t c = 0; c < 3; ++c) {
      CAPTURE(i);
      CAPTURE(c);
      CHECK(near(set.solutions[i].coordinates[c], expected[i][c], 1e-4));
    }
  }
}

TEST_CASE("solve_assembled takes the Cartesian product of block solutions") {
  const auto set = solve_assembled(assemble(plan(3, 2)), 50);
  CHECK(set.count_claimed == 4);
  REQUIRE(set.solutions.size() == 4);
  // Two m=1 blocks with roots {1, 2} and one slack: points (a, b, 1).
  std::vector<std::pair<int, int>> seen;
  for (const auto& solution : set.solutions) {
    REQUIRE(solution.coordinates.size() == 3);
    const Real& a = solution.coordinates[0];
    const Real& b = solution.coordinates[1];
    CHECK((a == 1 || a == 2));
    CHECK((b == 1 || b == 2));
    CHECK(solution.coordinates[2] == 1);  // slack coordinate is exactly 1
    seen.emplace_back(a == 1 ? 1 : 2, b == 1 ? 1 : 2);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
}

TEST_CASE("solve_assembled certifies every product point") {
  const auto system = assemble(plan(5, 2));
  const auto set = solve_assembled(system, 50);
  CHECK(set.count_claimed == 9);
  REQUIRE(set.solutions.size() == 9);
  for (const auto& solution : set.solutions) {
    const auto cert = certify(system, solution.coordinates, 50);
    CHECK(cert.positive);
    CHECK(cert.nondegenerate);
    CHECK(cert.residual_norm < Real("1e-40"));
    CHECK(solution.coordinates[4] == 1);
  }
}

TEST_CASE("solve_assembled needs a plan") {
  CHECK_THROWS_AS(solve_assembled(fewnomial::testing::example_system_2var(), 50),
                  DomainError);
}

TEST_CASE("sturm agrees with the Descartes bisection oracle") {
  std::mt19937 rng(424243);
  std::uniform_int_distribution<int> degree_dist(0, 6);
  std::uniform_int_distribution<long> numerator_dist(-50, 50);
  std::uniform_int_distribution<long> denominator_dist(1, 10);

  std::size_t nonzero = 0;
  while (nonzero < 200) {
    const int degree = degree_dist(rng);
    std::vector<Rational> coefficients;
    for (int i = 0; i <= degree; ++i) {
      coefficients.emplace_back(numerator_dist(rng), denominator_dist(rng));
    }
    UnivariatePolynomial p(coefficients);
    if (p.is_zero()) continue;
    ++nonzero;
    CAPTURE(nonzero);
    CHECK(sturm_positive_count(p) ==
          fewnomial::testing::oracle_positive_count(p.coefficients()));
  }
}
