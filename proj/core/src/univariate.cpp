#include "fewnomial/univariate.hpp"

#include <algorithm>

namespace fewnomial {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational UnivariatePolynomial::coeff(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

const Rational& UnivariatePolynomial::leading() const {
  if (is_zero()) throw DomainError("the zero polynomial has no leading coefficient");
  return coefficients_.back();
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
  Rational value(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value = value * x + *it;
  }
  return value;
}

Real UnivariatePolynomial::evaluate(const Real& x) const {
  Real value(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value = value * x + Real(*it);
  }
  return value;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (coefficients_.size() <= 1) return UnivariatePolynomial();
  std::vector<Rational> coeffs(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    coeffs[i - 1] = coefficients_[i] * Rational(static_cast<long>(i));
  }
  return UnivariatePolynomial(std::move(coeffs));
}

UnivariatePolynomial UnivariatePolynomial::operator+(const UnivariatePolynomial& other) const {
  std::vector<Rational> coeffs(std::max(coefficients_.size(), other.coefficients_.size()),
                               Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coeffs[i] += coefficients_[i];
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coeffs[i] += other.coefficients_[i];
  return UnivariatePolynomial(std::move(coeffs));
}

UnivariatePolynomial UnivariatePolynomial::operator-(const UnivariatePolynomial& other) const {
  return *this + other * Rational(-1);
}

UnivariatePolynomial UnivariatePolynomial::operator*(const UnivariatePolynomial& other) const {
  if (is_zero() || other.is_zero()) return UnivariatePolynomial();
  std::vector<Rational> coeffs(coefficients_.size() + other.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      coeffs[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  return UnivariatePolynomial(std::move(coeffs));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const Rational& scalar) const {
  std::vector<Rational> coeffs;
  if (scalar != 0) {
    coeffs.reserve(coefficients_.size());
    for (const auto& c : coefficients_) coeffs.push_back(c * scalar);
  }
  return UnivariatePolynomial(std::move(coeffs));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> UnivariatePolynomial::divmod(
    const UnivariatePolynomial& dividend, const UnivariatePolynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients_;
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {UnivariatePolynomial(), dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1, Rational(0));
  for (int i = dividend.degree(); i >= dd; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / divisor.leading();
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -=
          factor * divisor.coefficients_[static_cast<std::size_t>(j)];
    }
  }
  return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial UnivariatePolynomial::primitive() const {
  if (is_zero()) return *this;
  // Clear denominators, divide out the integer content, fix the leading sign.
  Integer lcm_den(1);
  for (const auto& c : coefficients_) {
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
  }
  Integer content(0);
  std::vector<Integer> scaled;
  scaled.reserve(coefficients_.size());
  for (const auto& c : coefficients_) {
    Integer v = numerator(c) * (lcm_den / denominator(c));
    content = boost::multiprecision::gcd(content, v);
    scaled.push_back(std::move(v));
  }
  if (scaled.back() < 0) content = -content;
  std::vector<Rational> coeffs;
  coeffs.reserve(scaled.size());
  for (const auto& v : scaled) coeffs.emplace_back(v / content);
  return UnivariatePolynomial(std::move(coeffs));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) throw DomainError("the zero polynomial cannot be made monic");
  return *this * (Rational(1) / leading());
}

UnivariatePolynomial UnivariatePolynomial::gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    auto [quot, rem] = divmod(a, b);
    (void)quot;
    a = std::move(b);
    // Rescaling the remainder keeps coefficient growth in check without
    // changing the gcd (we normalize to monic at the end anyway).
    b = rem.is_zero() ? std::move(rem) : rem.primitive();
  }
  if (a.is_zero()) return a;
  return a.monic();
}

UnivariatePolynomial UnivariatePolynomial::squarefree_part() const {
  if (is_zero()) throw DomainError("the zero polynomial has no squarefree part");
  if (degree() == 0) return UnivariatePolynomial({Rational(1)});
  const UnivariatePolynomial g = gcd(*this, derivative());
  auto [quot, rem] = divmod(*this, g);
  if (!rem.is_zero()) throw DomainError("gcd does not divide its polynomial");
  return quot.primitive();
}

UnivariatePolynomial to_univariate(const SparsePolynomial& poly, std::size_t var) {
  std::vector<Rational> coeffs;
  for (const auto& term : poly.terms()) {
    long deg = 0;
    for (std::size_t i = 0; i < term.exponent.size(); ++i) {
      const Rational& e = term.exponent[i];
      if (i == var) {
        if (!is_integer(e) || e < 0) {
          throw DomainError("univariate conversion needs nonnegative integer exponents");
        }
        deg = rational_to_long(e);
      } else if (e != 0) {
        throw DomainError("polynomial still mentions an eliminated variable");
      }
    }
    if (coeffs.size() <= static_cast<std::size_t>(deg)) {
      coeffs.resize(static_cast<std::size_t>(deg) + 1, Rational(0));
    }
    coeffs[static_cast<std::size_t>(deg)] += term.coefficient;
  }
  return UnivariatePolynomial(std::move(coeffs));
}

}  // namespace fewnomial
