#include "fewnomial/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace fewnomial {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) {
      throw FormatError("bad rational literal: '" + text + "'");
    }
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw FormatError("bad rational literal: '" + text + "'");
  }
  Integer q(den);
  if (q == 0) {
    throw FormatError("zero denominator in rational literal: '" + text + "'");
  }
  return Rational(Integer(num), q);
}

std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

long rational_to_long(const Rational& value) {
  if (!is_integer(value)) {
    throw DomainError("rational " + rational_to_string(value) + " is not an integer");
  }
  return numerator(value).convert_to<long>();
}

std::string real_to_string(const Real& x, unsigned digits10) {
  return x.str(static_cast<std::streamsize>(digits10));
}

Integer integer_pow(const Integer& base, unsigned exponent) {
  Integer result(1);
  Integer b = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

Real real_pow(const Real& base, const Rational& exponent) {
  if (exponent == 0) return Real(1);
  if (is_integer(exponent)) {
    const Integer n = numerator(exponent);
    const bool negative = n < 0;
    Integer e = abs(n);
    Real result(1);
    Real b = base;
    while (e > 0) {
      if ((e & 1) != 0) result *= b;
      b *= b;
      e >>= 1;
    }
    return negative ? Real(1) / result : result;
  }
  if (!(base > 0)) {
    throw DomainError("fractional power of a non-positive base");
  }
  // The exponent must be converted at (at least) the base's precision: a
  // non-dyadic rational like 1/7 truncated at a narrower ambient default
  // would poison the correctly rounded pow below.
  PrecisionScope scope(
      std::max(static_cast<unsigned>(base.precision()), Real::default_precision()));
  return pow(base, to_real(exponent));
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer result(1);
  for (unsigned i = 1; i <= k; ++i) {
    result *= Integer(n - k + i);
    result /= Integer(i);
  }
  return result;
}

}  // namespace fewnomial
