#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "fewnomial/numeric.hpp"

namespace fewnomial {

/// One exponent per variable, as exact rationals. Equality is exact, which is
/// what makes the distinct-monomial census decidable.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational total_degree() const;

  /// True when every entry is an integer (negative allowed).
  bool all_integer() const;
  /// True when every entry is a nonnegative integer.
  bool all_nonnegative_integer() const;

  /// Copy with entry `var` replaced by `value`.
  ExponentVector with_entry(std::size_t var, Rational value) const;

  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<Rational> entries_;
};

/// Graded lexicographic order: total degree first, then entrywise.
/// This is the canonical term order for every polynomial in the library.
struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

struct Term {
  Rational coefficient;  // nonzero by construction
  ExponentVector exponent;

  bool operator==(const Term&) const = default;
};

/// A sparse polynomial with exact rational coefficients and exponents.
/// Terms are stored in descending grlex order with distinct exponent vectors
/// and nonzero coefficients, so equality and serialization are deterministic.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;  // the zero polynomial in zero variables
  /// Canonicalizes: merges duplicate exponents, drops zero coefficients, sorts.
  SparsePolynomial(std::size_t arity, std::vector<Term> terms);

  static SparsePolynomial zero(std::size_t arity) { return SparsePolynomial(arity, {}); }
  static SparsePolynomial constant(std::size_t arity, Rational value);

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Evaluates at a strictly positive point using the current Real precision.
  /// Integer exponents use exact binary powering; fractional exponents go
  /// through correctly rounded pow. Throws DomainError on a non-positive
  /// coordinate, ShapeError on a length mismatch.
  Real evaluate(const std::vector<Real>& point) const;

  /// Exact evaluation at a strictly positive rational point. Requires every
  /// exponent to be an integer; throws DomainError otherwise.
  Rational evaluate_exact(const std::vector<Rational>& point) const;

  /// Partial derivative with respect to variable `var`, computed exactly
  /// term by term: d/dx_j c*x^e = c*e_j*x^(e - delta_j).
  SparsePolynomial partial_derivative(std::size_t var) const;

  SparsePolynomial operator+(const SparsePolynomial& other) const;
  SparsePolynomial operator-(const SparsePolynomial& other) const;
  SparsePolynomial operator*(const SparsePolynomial& other) const;
  SparsePolynomial operator*(const Rational& scalar) const;

  bool operator==(const SparsePolynomial&) const = default;

 private:
  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

/// c * x^e as a polynomial term power: (c * x^e)^k computed exactly.
Term term_pow(const Term& t, unsigned k);

}  // namespace fewnomial
