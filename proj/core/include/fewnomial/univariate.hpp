#pragma once

#include <utility>
#include <vector>

#include "fewnomial/polynomial.hpp"

namespace fewnomial {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree order with no trailing zeros. This is the shape of a
/// block's eliminant and the input to the Sturm machinery.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;  // the zero polynomial
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);

  bool is_zero() const { return coefficients_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  Real evaluate(const Real& x) const;
  UnivariatePolynomial derivative() const;

  UnivariatePolynomial operator+(const UnivariatePolynomial& other) const;
  UnivariatePolynomial operator-(const UnivariatePolynomial& other) const;
  UnivariatePolynomial operator*(const UnivariatePolynomial& other) const;
  UnivariatePolynomial operator*(const Rational& scalar) const;

  /// Exact Euclidean division: returns (quotient, remainder) with
  /// deg(remainder) < deg(divisor). Throws DomainError on a zero divisor.
  static std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(
      const UnivariatePolynomial& dividend, const UnivariatePolynomial& divisor);

  /// Scales to integer coefficients with content 1 and positive leading
  /// coefficient. The zero polynomial stays zero.
  UnivariatePolynomial primitive() const;
  /// Scales so the leading coefficient is 1.
  UnivariatePolynomial monic() const;

  /// Monic greatest common divisor by the Euclidean algorithm.
  static UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);

  /// p / gcd(p, p'): same roots, all simple. Returned primitive.
  UnivariatePolynomial squarefree_part() const;

  bool operator==(const UnivariatePolynomial&) const = default;

 private:
  std::vector<Rational> coefficients_;
};

/// Reads an arity-n sparse polynomial that mentions only variable `var` (with
/// nonnegative integer exponents) into dense univariate form. Throws
/// DomainError if any other variable appears or an exponent is fractional or
/// negative.
UnivariatePolynomial to_univariate(const SparsePolynomial& poly, std::size_t var);

}  // namespace fewnomial
