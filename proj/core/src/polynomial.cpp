#include "fewnomial/polynomial.hpp"

#include <algorithm>
#include <map>

namespace fewnomial {

Rational ExponentVector::total_degree() const {
  Rational sum(0);
  for (const auto& e : entries_) sum += e;
  return sum;
}

bool ExponentVector::all_integer() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& e) { return is_integer(e); });
}

bool ExponentVector::all_nonnegative_integer() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& e) { return is_integer(e) && e >= 0; });
}

ExponentVector ExponentVector::with_entry(std::size_t var, Rational value) const {
  std::vector<Rational> entries = entries_;
  entries.at(var) = std::move(value);
  return ExponentVector(std::move(entries));
}

bool GrlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const Rational da = a.total_degree();
  const Rational db = b.total_degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                      b.entries().begin(), b.entries().end());
}

SparsePolynomial::SparsePolynomial(std::size_t arity, std::vector<Term> terms)
    : arity_(arity) {
  std::map<ExponentVector, Rational, GrlexLess> merged;
  for (auto& t : terms) {
    if (t.exponent.size() != arity_) {
      throw ShapeError("term exponent length does not match polynomial arity");
    }
    merged[t.exponent] += t.coefficient;
  }
  terms_.reserve(merged.size());
  // descending grlex
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    if (it->second == 0) continue;
    terms_.push_back(Term{it->second, it->first});
  }
}

SparsePolynomial SparsePolynomial::constant(std::size_t arity, Rational value) {
  std::vector<Term> terms;
  if (value != 0) {
    terms.push_back(Term{std::move(value), ExponentVector(std::vector<Rational>(arity, Rational(0)))});
  }
  return SparsePolynomial(arity, std::move(terms));
}

bool SparsePolynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_[0].exponent.total_degree() == 0 &&
         std::all_of(terms_[0].exponent.entries().begin(), terms_[0].exponent.entries().end(),
                     [](const Rational& e) { return e == 0; });
}

Real SparsePolynomial::evaluate(const std::vector<Real>& point) const {
  if (point.size() != arity_) {
    throw ShapeError("point length does not match polynomial arity");
  }
  for (const auto& x : point) {
    if (!(x > 0)) throw DomainError("evaluation requires a strictly positive point");
  }
  Real sum(0);
  for (const auto& term : terms_) {
    Real value(term.coefficient);
    for (std::size_t i = 0; i < arity_; ++i) {
      const Rational& e = term.exponent[i];
      if (e == 0) continue;
      value *= real_pow(point[i], e);
    }
    sum += value;
  }
  return sum;
}

Rational SparsePolynomial::evaluate_exact(const std::vector<Rational>& point) const {
  if (point.size() != arity_) {
    throw ShapeError("point length does not match polynomial arity");
  }
  for (const auto& x : point) {
    if (x <= 0) throw DomainError("evaluation requires a strictly positive point");
  }
  Rational sum(0);
  for (const auto& term : terms_) {
    if (!term.exponent.all_integer()) {
      throw DomainError("exact evaluation requires integer exponents");
    }
    Rational value = term.coefficient;
    for (std::size_t i = 0; i < arity_; ++i) {
      const Rational& e = term.exponent[i];
      if (e == 0) continue;
      const long k = rational_to_long(e);
      Rational p(1);
      const Rational base = k > 0 ? point[i] : Rational(1) / point[i];
      for (long j = 0; j < (k > 0 ? k : -k); ++j) p *= base;
      value *= p;
    }
    sum += value;
  }
  return sum;
}

SparsePolynomial SparsePolynomial::partial_derivative(std::size_t var) const {
  if (var >= arity_) throw ShapeError("derivative variable out of range");
  std::vector<Term> terms;
  for (const auto& term : terms_) {
    const Rational& e = term.exponent[var];
    if (e == 0) continue;
    terms.push_back(Term{term.coefficient * e, term.exponent.with_entry(var, e - 1)});
  }
  return SparsePolynomial(arity_, std::move(terms));
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
  if (arity_ != other.arity_) throw ShapeError("arity mismatch in polynomial sum");
  std::vector<Term> terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return SparsePolynomial(arity_, std::move(terms));
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& other) const {
  return *this + other * Rational(-1);
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
  if (arity_ != other.arity_) throw ShapeError("arity mismatch in polynomial product");
  std::vector<Term> terms;
  terms.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      std::vector<Rational> exps(arity_);
      for (std::size_t i = 0; i < arity_; ++i) exps[i] = a.exponent[i] + b.exponent[i];
      terms.push_back(Term{a.coefficient * b.coefficient, ExponentVector(std::move(exps))});
    }
  }
  return SparsePolynomial(arity_, std::move(terms));
}

SparsePolynomial SparsePolynomial::operator*(const Rational& scalar) const {
  std::vector<Term> terms;
  if (scalar != 0) {
    terms.reserve(terms_.size());
    for (const auto& t : terms_) terms.push_back(Term{t.coefficient * scalar, t.exponent});
  }
  return SparsePolynomial(arity_, std::move(terms));
}

Term term_pow(const Term& t, unsigned k) {
  Rational coeff(1);
  for (unsigned i = 0; i < k; ++i) coeff *= t.coefficient;
  std::vector<Rational> exps(t.exponent.size());
  for (std::size_t i = 0; i < t.exponent.size(); ++i) exps[i] = t.exponent[i] * Rational(k);
  return Term{std::move(coeff), ExponentVector(std::move(exps))};
}

}  // namespace fewnomial
