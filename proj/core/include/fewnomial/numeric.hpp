#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace fewnomial {

/// Arbitrary-precision integer (GMP).
using Integer = boost::multiprecision::mpz_int;
/// Exact rational number (GMP), always kept in canonical lowest terms.
using Rational = boost::multiprecision::mpq_rational;
/// Variable-precision floating-point number (MPFR).
using Real = boost::multiprecision::mpfr_float;

/// Default working precision, in decimal digits.
inline constexpr unsigned kDefaultDigits = 50;
/// Extra digits carried internally so results are good to the caller's digits.
inline constexpr unsigned kGuardDigits = 20;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates an operation's domain (non-positive point, zero polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Dimension mismatch: non-square system, wrong point length, ragged matrix.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Singular matrix passed where an invertible monomial change of variables is required.
class InvalidTransformError : public Error {
 public:
  using Error::Error;
};

/// No registered block of the requested dimension.
class UnsupportedBlockError : public Error {
 public:
  using Error::Error;
};

/// A block recipe is structurally broken (bad schedule, zero denominator, ...).
class MalformedRecipeError : public Error {
 public:
  using Error::Error;
};

/// A block recipe failed registration verification; the message names the invariant.
class BlockRejectedError : public Error {
 public:
  using Error::Error;
};

/// A solution failed certification, or a certified count disagrees with a claim.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized data (JSON schema violations, bad rational literals).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Scoped working precision for Real arithmetic. All Reals created while the
/// scope is alive carry this many decimal digits. Scopes nest; the previous
/// precision is restored on destruction. The underlying default is process-wide,
/// so concurrent work must share a single precision (which every operation in
/// this library does: precision is fixed before fan-out).
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10)
      : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Parses a canonical rational literal: "p", "-p", or "p/q" with q > 0.
/// The result is reduced to lowest terms. Throws FormatError on anything else.
Rational parse_rational(const std::string& text);

/// Canonical serialization: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rational_to_string(const Rational& value);

bool is_integer(const Rational& value);

/// The rational as a long; requires is_integer and a value that fits.
long rational_to_long(const Rational& value);

/// Rounds x to exactly digits10 decimal digits of working precision.
inline Real round_to_digits(const Real& x, unsigned digits10) {
  return Real(x, digits10);
}

/// Rational-to-Real conversion at the current working precision.
///
/// Always convert through this (or a named Rational lvalue), never
/// Real(a + b): constructing a Real from an unevaluated mpq expression
/// template skips the precision setup and produces a number with a garbage
/// precision in the billions of bits, which then poisons every value it
/// touches. Binding the expression to the const reference here materializes
/// it first, which is the entire point of this function.
inline Real to_real(const Rational& value) { return Real(value); }

inline Real to_real(const Integer& value) { return Real(value); }

/// Deterministic decimal rendering with the given significant digits.
std::string real_to_string(const Real& x, unsigned digits10);

/// base^exponent over arbitrary-precision integers.
Integer integer_pow(const Integer& base, unsigned exponent);

/// base^exponent at the wider of the current Real precision and the base's
/// own precision. Integer exponents use exact binary powering (so integral
/// results stay exact when representable); fractional exponents require
/// base > 0 and go through correctly rounded pow.
Real real_pow(const Real& base, const Rational& exponent);

/// Binomial coefficient C(n, k); zero when k > n.
Integer binomial(unsigned n, unsigned k);

}  // namespace fewnomial
