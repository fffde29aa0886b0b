#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "fewnomial/matrix.hpp"
#include "fewnomial/polynomial.hpp"

namespace fewnomial {

struct ConstructionPlan;

/// A list of sparse polynomials over named variables. Immutable after
/// construction apart from the optional plan attachment, which records how a
/// system was assembled and travels with it through serialization.
class SparseSystem {
 public:
  SparseSystem() = default;
  SparseSystem(std::vector<std::string> variables,
               std::vector<SparsePolynomial> polynomials);

  std::size_t arity() const { return variables_.size(); }
  std::size_t size() const { return polynomials_.size(); }
  bool is_square() const { return polynomials_.size() == variables_.size(); }

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<SparsePolynomial>& polynomials() const { return polynomials_; }

  const std::shared_ptr<const ConstructionPlan>& plan() const { return plan_; }
  void attach_plan(std::shared_ptr<const ConstructionPlan> plan) { plan_ = std::move(plan); }

  /// Evaluates every polynomial at the point (current Real precision).
  std::vector<Real> evaluate(const std::vector<Real>& point) const;

  /// Structural equality: variables and canonical polynomials. The attached
  /// plan is provenance, not content, and is ignored.
  bool operator==(const SparseSystem& other) const {
    return variables_ == other.variables_ && polynomials_ == other.polynomials_;
  }

 private:
  std::vector<std::string> variables_;
  std::vector<SparsePolynomial> polynomials_;
  std::shared_ptr<const ConstructionPlan> plan_;
};

/// A positive point together with the evidence that it solves a system:
/// residual norm, Jacobian determinant, and the precision they were computed at.
struct CertifiedSolution {
  std::vector<Real> coordinates;
  Real residual_norm;
  Real jacobian_det;
  unsigned working_precision = kDefaultDigits;
};

using Support = std::set<ExponentVector, GrlexLess>;

/// Exponent vectors of the polynomial's monomials, deduplicated exactly.
Support support(const SparsePolynomial& poly);

/// Union of the exponent vectors over all polynomials. Its cardinality is the
/// system's monomial count (the n+k+1 census).
Support support(const SparseSystem& system);

/// Dimension of the affine span of the support: the exact rank of
/// {v - v0 : v in supp} for a fixed base point v0. Throws DomainError on an
/// empty support.
std::size_t affine_span_dim(const Support& supp);

/// Matrix of partial derivatives d f_i / d x_j evaluated at a positive point.
std::vector<std::vector<Real>> jacobian_matrix(const SparseSystem& system,
                                               const std::vector<Real>& point);

/// Determinant of the Jacobian at the point, by LU with partial pivoting at
/// the current Real precision. Throws ShapeError on a non-square system.
Real jacobian_det(const SparseSystem& system, const std::vector<Real>& point);

/// Monomial change of variables: each exponent vector e (a row vector) is
/// replaced by e * A. Coefficients are untouched. A must be square of the
/// system's arity and invertible (exact determinant check); otherwise throws
/// InvalidTransformError. Positive solutions map bijectively: see
/// transform_point for the matching point map.
SparseSystem monomial_substitution(const SparseSystem& system, const RationalMatrix& transform);

/// The point map paired with monomial_substitution: if x solves S, then
/// x'_i = prod_j x_j^{inv(A)[i][j]} solves monomial_substitution(S, A),
/// because (e*A) . log x' = e . log x for every exponent row e.
std::vector<Real> transform_point(const std::vector<Real>& point, const RationalMatrix& transform);

}  // namespace fewnomial
