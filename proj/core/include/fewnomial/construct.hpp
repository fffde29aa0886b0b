#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fewnomial/blocks.hpp"
#include "fewnomial/system.hpp"

namespace fewnomial {

/// How an n-equation system is assembled from k variable-disjoint copies of an
/// m-variable block plus j slack equations x_i = 1, where n = k*m + j.
struct ConstructionPlan {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t j = 0;
  std::vector<std::string> block_ids;  // one per block, all of dimension m
  Integer predicted;                   // (m+1)^k
  /// (local name, global name) pairs: block b's variable y maps to "b<b>.<y>",
  /// slack i to "slack<i>"; globals are x1..xn in order.
  std::vector<std::pair<std::string, std::string>> variable_layout;
  /// True when n = k: the construction still goes through with the m=1 block,
  /// but Theorem-style counting is stated for n > k only.
  bool outside_theorem_range = false;
};

/// Lays out the construction for the given n and k: m = floor(n/k) copies of
/// the registered m-block plus j = n - k*m slacks. Throws DomainError when
/// n < k or either is zero, UnsupportedBlockError when no block of dimension
/// m is registered. Pass block_ids to override the default homogeneous choice
/// (all k entries must name registered blocks of dimension m).
ConstructionPlan plan(std::size_t n, std::size_t k,
                      const std::vector<std::string>& block_ids = {});

/// Exact floor((n+k)/k)^k. Requires n >= k >= 1.
Integer predicted_count(std::size_t n, std::size_t k);

/// Instantiates the plan: block b occupies global variables
/// x_{(b-1)m+1} .. x_{bm}, slacks the trailing j indices, every slack equation
/// is x_i - 1 = 0. The result is square with support cardinality n+k+1 and
/// carries the plan as metadata.
SparseSystem assemble(const ConstructionPlan& plan);

/// (monomial count, affine span dimension) of the system's support.
std::pair<std::size_t, std::size_t> census(const SparseSystem& system);

}  // namespace fewnomial
