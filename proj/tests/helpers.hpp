#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "fewnomial/numeric.hpp"
#include "fewnomial/polynomial.hpp"
#include "fewnomial/system.hpp"
#include "fewnomial/univariate.hpp"

namespace fewnomial::testing {

inline ExponentVector ev(std::initializer_list<long> entries) {
  std::vector<Rational> out;
  out.reserve(entries.size());
  for (long e : entries) out.emplace_back(e);
  return ExponentVector(std::move(out));
}

inline Term term(const char* coefficient, std::initializer_list<long> exponents) {
  return Term{parse_rational(coefficient), ev(exponents)};
}

inline UnivariatePolynomial upoly(std::initializer_list<const char*> ascending) {
  std::vector<Rational> coefficients;
  coefficients.reserve(ascending.size());
  for (const char* c : ascending) coefficients.push_back(parse_rational(c));
  return UnivariatePolynomial(std::move(coefficients));
}

// The two-variable running example: x^2 y - 4 x^2 - 1 = x y - x^2 - 4 = 0,
// with the three positive solutions near (0.381966, 10.854102), (1, 5),
// (2.618034, 4.145898).
inline SparseSystem example_system_2var() {
  SparsePolynomial f0(2, {term("1", {2, 1}), term("-4", {2, 0}), term("-1", {0, 0})});
  SparsePolynomial f1(2, {term("-1", {2, 0}), term("1", {1, 1}), term("-4", {0, 0})});
  return SparseSystem({"x", "y"}, {f0, f1});
}

inline bool near(const Real& value, const char* target, const char* tolerance) {
  return abs(value - Real(target)) < Real(tolerance);
}

inline bool near(const Real& value, double target, double tolerance) {
  return abs(value - Real(target)) < Real(tolerance);
}

}  // namespace fewnomial::testing
