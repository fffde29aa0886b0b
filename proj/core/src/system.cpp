#include "fewnomial/system.hpp"

#include <algorithm>
#include <utility>

namespace fewnomial {

SparseSystem::SparseSystem(std::vector<std::string> variables,
                           std::vector<SparsePolynomial> polynomials)
    : variables_(std::move(variables)), polynomials_(std::move(polynomials)) {
  for (const auto& p : polynomials_) {
    if (p.arity() != variables_.size()) {
      throw ShapeError("polynomial arity does not match the system's variable count");
    }
  }
}

std::vector<Real> SparseSystem::evaluate(const std::vector<Real>& point) const {
  std::vector<Real> values;
  values.reserve(polynomials_.size());
  for (const auto& p : polynomials_) values.push_back(p.evaluate(point));
  return values;
}

Support support(const SparsePolynomial& poly) {
  Support supp;
  for (const auto& term : poly.terms()) supp.insert(term.exponent);
  return supp;
}

Support support(const SparseSystem& system) {
  Support supp;
  for (const auto& poly : system.polynomials()) {
    for (const auto& term : poly.terms()) supp.insert(term.exponent);
  }
  return supp;
}

std::size_t affine_span_dim(const Support& supp) {
  if (supp.empty()) throw DomainError("affine span of an empty support is undefined");
  if (supp.size() == 1) return 0;
  const ExponentVector& base = *supp.begin();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(supp.size() - 1);
  for (auto it = std::next(supp.begin()); it != supp.end(); ++it) {
    if (it->size() != base.size()) {
      throw ShapeError("support mixes exponent vectors of different lengths");
    }
    std::vector<Rational> row(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) row[i] = (*it)[i] - base[i];
    rows.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(rows).rank();
}

std::vector<std::vector<Real>> jacobian_matrix(const SparseSystem& system,
                                               const std::vector<Real>& point) {
  const std::size_t rows = system.size();
  const std::size_t cols = system.arity();
  std::vector<std::vector<Real>> jac(rows, std::vector<Real>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      jac[i][j] = system.polynomials()[i].partial_derivative(j).evaluate(point);
    }
  }
  return jac;
}

Real jacobian_det(const SparseSystem& system, const std::vector<Real>& point) {
  if (!system.is_square()) {
    throw ShapeError("Jacobian determinant requires a square system");
  }
  auto m = jacobian_matrix(system, point);
  const std::size_t n = m.size();
  Real det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(m[r][col]) > abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0) return Real(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Real factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

SparseSystem monomial_substitution(const SparseSystem& system, const RationalMatrix& transform) {
  const std::size_t n = system.arity();
  if (!transform.is_square() || transform.rows() != n) {
    throw InvalidTransformError("monomial substitution needs a square matrix of the system's arity");
  }
  if (transform.determinant() == 0) {
    throw InvalidTransformError("monomial substitution needs an invertible matrix");
  }
  std::vector<SparsePolynomial> transformed;
  transformed.reserve(system.size());
  for (const auto& poly : system.polynomials()) {
    std::vector<Term> terms;
    terms.reserve(poly.terms().size());
    for (const auto& term : poly.terms()) {
      std::vector<Rational> image(n, Rational(0));
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
          image[c] += term.exponent[r] * transform.at(r, c);
        }
      }
      terms.push_back(Term{term.coefficient, ExponentVector(std::move(image))});
    }
    transformed.emplace_back(n, std::move(terms));
  }
  return SparseSystem(system.variables(), std::move(transformed));
}

std::vector<Real> transform_point(const std::vector<Real>& point, const RationalMatrix& transform) {
  const std::size_t n = point.size();
  if (!transform.is_square() || transform.rows() != n) {
    throw InvalidTransformError("point transform needs a square matrix of the point's length");
  }
  const RationalMatrix inv = transform.inverse();
  // Work at the precision the point carries, not the ambient default, so the
  // image is as accurate as its source.
  unsigned digits = Real::default_precision();
  for (const auto& coordinate : point) {
    digits = std::max(digits, static_cast<unsigned>(coordinate.precision()));
  }
  PrecisionScope scope(digits);
  std::vector<Real> image(n, Real(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& e = inv.at(i, j);
      if (e == 0) continue;
      image[i] *= real_pow(point[j], e);
    }
  }
  return image;
}

}  // namespace fewnomial
