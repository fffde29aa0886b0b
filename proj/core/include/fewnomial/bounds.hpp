#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "fewnomial/numeric.hpp"

namespace fewnomial {

/// The transcendental constant a bound carries alongside its exact part.
enum class TranscendentalFactor {
  kNone,       // the bound is exactly the rational exact_part
  kE2P3Over4,  // exact_part * (e^2+3)/4
  kE2P3Over8,  // exact_part * (e^2+3)/8
};

/// A bound split into an exact rational factor and a tagged transcendental
/// factor, so equal-tag comparisons are exact and mixed comparisons can be
/// decided by interval arithmetic rather than fixed-precision guesswork.
struct BoundValue {
  Rational exact_part;
  TranscendentalFactor factor = TranscendentalFactor::kNone;

  static BoundValue exact(Rational value) {
    return BoundValue{std::move(value), TranscendentalFactor::kNone};
  }

  /// Numeric value at the given decimal precision.
  Real approx(unsigned digits = kDefaultDigits) const;
};

enum class Order { kLess, kEqual, kGreater };

/// Exact comparison when the tags match (or an exact part is zero); otherwise
/// directed-rounding interval arithmetic on e^2 at escalating precision until
/// the sign is certain. Terminates because a nonzero rational never equals a
/// nonzero rational multiple of the transcendental e^2+3.
Order compare(const BoundValue& a, const BoundValue& b);

std::string factor_name(TranscendentalFactor factor);

// Solution-count bounds ------------------------------------------------------

/// floor((n+k)/k)^k, the constructed lower bound. Requires n >= k >= 1.
Integer lower_bound(std::size_t n, std::size_t k);

/// n+1: the sharp count for n+2 monomials (the k=1 column).
Integer bihan_exact_k1(std::size_t n);

/// (e^2+3)/4 * 2^C(k,2) * n^k nondegenerate positive solutions.
BoundValue bs_solution_bound(std::size_t n, std::size_t k);

/// 2^C(n+k,2) * (n+1)^(n+k) nondegenerate positive solutions.
BoundValue khovanskii_solution_bound(std::size_t n, std::size_t k);

// Connected-component bounds -------------------------------------------------

/// (e^2+3)/8 * 2^C(k,2) * n^k: compact components of a smooth hypersurface.
BoundValue kappa_upper(std::size_t n, std::size_t k);

/// sum_{i=0}^{n-1} C(n+1,i) * kappa_upper(n-i, k+1): the combinatorial
/// estimate for all components of a smooth hypersurface.
BoundValue lemma3_sum(std::size_t n, std::size_t k);

/// (e^2+3)/4 * 2^C(k+1,2) * 2^n * n^(k+1): closed-form smooth-hypersurface
/// component bound.
BoundValue theorem2_bound(std::size_t n, std::size_t k);

/// Twice theorem2_bound: components of a possibly singular hypersurface.
BoundValue singular_bound(std::size_t n, std::size_t k);

/// (e^2+3)/4 * 2^C(k,2) * 2^n * n^k: the sharpened component bound when the
/// support contains a monomial off the affine span's boundary cases.
BoundValue full_support_bound(std::size_t n, std::size_t k);

/// (2n^2-n+1)^(n+k) * (2n)^(n-1) * 2^C(n+k,2): total Betti number.
BoundValue khovanskii_betti_bound(std::size_t n, std::size_t k);

/// n * (n+1)^(n+k+1) * 2^(n-1) * 2^C(n+k+1,2): components.
BoundValue lrw_component_bound(std::size_t n, std::size_t k);

/// (n+1)^(n+k) * 2^(1+C(n+k,2)): components.
BoundValue perrucci_bound(std::size_t n, std::size_t k);

// Reports --------------------------------------------------------------------

/// Results of the pairwise comparisons the formulas promise; unset when a
/// participant is undefined at this (n,k).
struct OrderingFlags {
  std::optional<bool> lower_le_bs;
  bool lemma3_lt_theorem2 = false;
  std::optional<bool> full_support_lt_theorem2;
  bool kappa_doubles_to_bs = false;
  bool singular_doubles_theorem2 = false;
  bool perrucci_lt_lrw = false;
};

struct BoundReport {
  std::size_t n = 0;
  std::size_t k = 0;
  unsigned digits = kDefaultDigits;
  /// Keyed by bound name. Always carries the ten upper bounds; adds "lower"
  /// when n >= k >= 1 and "bihan_exact_k1" when k == 1.
  std::map<std::string, BoundValue> entries;
  OrderingFlags ordering;
};

/// All bounds at (n, k) plus the asserted orderings. Requires n >= 1; k may
/// be 0 (hypersurface conventions: C(0,2) = 0, n^0 = 1).
BoundReport report(std::size_t n, std::size_t k, unsigned digits = kDefaultDigits);

}  // namespace fewnomial
