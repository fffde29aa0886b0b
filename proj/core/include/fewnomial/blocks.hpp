#pragma once

#include <map>
#include <string>
#include <vector>

#include "fewnomial/system.hpp"
#include "fewnomial/univariate.hpp"

namespace fewnomial {

/// One elimination step: equation `equation` of the block system is solved for
/// `variable` as numerator/denominator, where the denominator is a single
/// monomial (so clearing it multiplies by pure variable powers, which never
/// vanish on the positive orthant).
struct ScheduleStep {
  std::size_t equation = 0;
  std::size_t variable = 0;
  SparsePolynomial numerator;
  Term denominator;
};

/// An m-variable system with m+2 monomials attaining m+1 positive
/// nondegenerate solutions, together with the elimination schedule that
/// reduces it to a univariate eliminant in the principal variable.
struct BlockRecipe {
  std::string id;
  std::size_t m = 0;
  SparseSystem system;
  std::vector<ScheduleStep> schedule;
  UnivariatePolynomial eliminant;
  std::size_t expected_count = 0;
  std::size_t principal_variable = 0;
};

/// Applies the schedule in order, clearing denominators as it goes, and
/// returns the resulting univariate polynomial in the principal variable
/// (primitive integer form with positive leading coefficient; any positive
/// scalar multiple has the same positive roots). Throws MalformedRecipeError
/// on a schedule that does not eliminate cleanly.
UnivariatePolynomial eliminate(const BlockRecipe& recipe);

/// Append-only registry of verified blocks, keyed by dimension m.
/// Registration verifies the recipe in full — monomial census, eliminant
/// recomputation, solution count and certification — and throws
/// BlockRejectedError naming the failed invariant otherwise.
class BlockRegistry {
 public:
  /// Verifies and stores the recipe; returns its id. Re-registering an id
  /// that is already present and identical is a no-op; a conflicting recipe
  /// under the same id is rejected.
  std::string register_block(const BlockRecipe& recipe);

  bool has_dimension(std::size_t m) const;
  /// The registered recipe of dimension m. Throws UnsupportedBlockError
  /// (naming register_block as the extension hook) if none is registered.
  const BlockRecipe& by_dimension(std::size_t m) const;
  const BlockRecipe& by_id(const std::string& id) const;

  std::vector<std::string> ids() const;

 private:
  std::map<std::string, BlockRecipe> by_id_;
  std::map<std::size_t, std::string> dimension_index_;
};

/// The process-wide registry, preloaded with the verified builtin blocks
/// (m = 1, 2, 3) on first use.
BlockRegistry& default_registry();

/// The builtin recipe of dimension m in {1, 2, 3}, from the shipped data
/// files. Throws UnsupportedBlockError for other m.
const BlockRecipe& builtin_block(std::size_t m);

}  // namespace fewnomial
