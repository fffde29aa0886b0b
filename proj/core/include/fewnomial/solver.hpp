#pragma once

#include <optional>
#include <vector>

#include "fewnomial/blocks.hpp"
#include "fewnomial/system.hpp"
#include "fewnomial/univariate.hpp"

namespace fewnomial {

/// An open interval (lo, hi) with 0 < lo < hi containing exactly one root of
/// the target polynomial; neither endpoint is a root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool sign_change = false;  // p(lo) and p(hi) have opposite signs
};

/// A refined root: the numeric value at working precision plus, when the root
/// happens to be rational, its exact value (in which case `value` is the
/// exact conversion and the residual is exactly zero).
struct RefinedRoot {
  Real value;
  std::optional<Rational> exact;
};

/// Certification verdict for one point against one system.
struct Certificate {
  Real residual_norm;
  Real jacobian_det;
  bool nondegenerate = false;
  bool positive = false;
};

/// A system together with its certified solutions.
struct SolutionSet {
  SparseSystem system;
  std::vector<CertifiedSolution> solutions;
  std::size_t count_claimed = 0;
};

/// Exact number of distinct roots in (0, inf), by the sign-variation
/// difference of the Sturm sequence of the squarefree part. Throws
/// DomainError on the zero polynomial.
std::size_t sturm_positive_count(const UnivariatePolynomial& p);

/// Disjoint isolating intervals in (0, inf), one per distinct positive root,
/// in increasing order. The initial bracket comes from the Cauchy root bound;
/// splitting is driven by exact Sturm counts on subintervals.
std::vector<IsolatingInterval> isolate_positive_roots(const UnivariatePolynomial& p);

/// Refines the interval's root to the given precision: exact rational-root
/// test first, then bisection into the Newton basin, then Newton iteration
/// (cap 200, with bisection fallback on any misstep, so a valid interval
/// never fails). The result satisfies |p(r)| < 10^(4-digits) * scale.
RefinedRoot refine_root(const UnivariatePolynomial& p, const IsolatingInterval& interval,
                        unsigned digits);

/// Evaluates residual and Jacobian at the point: residual_norm = max |f_i|,
/// nondegenerate iff |jacobian_det| > 1e-8 * product of Jacobian row
/// max-norms, positive iff every coordinate is > 0.
Certificate certify(const SparseSystem& system, const std::vector<Real>& point,
                    unsigned digits);

/// Solves the block system: isolates and refines the positive roots of the
/// eliminant, back-substitutes through the schedule, and certifies each point.
/// Returns exactly recipe.expected_count solutions ordered by increasing
/// principal coordinate; anything else is a CertificationError.
SolutionSet solve_block(const BlockRecipe& recipe, unsigned digits);

/// Solves a system carrying a ConstructionPlan: Cartesian product of the
/// per-block solution sets with slack coordinates exactly 1, every product
/// point re-certified against the full system. `threads` > 1 certifies
/// product points in parallel; the output is bit-identical regardless.
/// Throws DomainError if the system has no plan, CertificationError if any
/// product point fails.
SolutionSet solve_assembled(const SparseSystem& system, unsigned digits,
                            unsigned threads = 1);

}  // namespace fewnomial
