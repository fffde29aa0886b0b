#include "fewnomial/construct.hpp"

#include <memory>
#include <sstream>
#include <utility>
#include <vector>

namespace fewnomial {

Integer predicted_count(std::size_t n, std::size_t k) {
  if (k < 1 || n < k) {
    std::ostringstream msg;
    msg << "predicted_count requires n >= k >= 1, got n = " << n
        << ", k = " << k;
    throw DomainError(msg.str());
  }
  return integer_pow(Integer((n + k) / k), static_cast<unsigned>(k));
}

ConstructionPlan plan(std::size_t n, std::size_t k,
                      const std::vector<std::string>& block_ids) {
  if (k < 1 || n < k) {
    std::ostringstream msg;
    msg << "construction requires n >= k >= 1, got n = " << n << ", k = " << k;
    throw DomainError(msg.str());
  }
  const std::size_t m = n / k;
  const std::size_t j = n - k * m;

  BlockRegistry& registry = default_registry();
  ConstructionPlan out;
  out.n = n;
  out.k = k;
  out.m = m;
  out.j = j;
  out.outside_theorem_range = (n == k);

  if (block_ids.empty()) {
    const BlockRecipe& block = registry.by_dimension(m);
    out.block_ids.assign(k, block.id);
  } else {
    if (block_ids.size() != k) {
      std::ostringstream msg;
      msg << "expected " << k << " block ids, got " << block_ids.size();
      throw DomainError(msg.str());
    }
    for (const std::string& id : block_ids) {
      const BlockRecipe& block = registry.by_id(id);
      if (block.m != m) {
        std::ostringstream msg;
        msg << "block '" << id << "' has dimension " << block.m
            << ", but this construction needs dimension " << m;
        throw DomainError(msg.str());
      }
    }
    out.block_ids = block_ids;
  }

  out.predicted = predicted_count(n, k);

  for (std::size_t b = 1; b <= k; ++b) {
    const BlockRecipe& block = registry.by_id(out.block_ids[b - 1]);
    for (std::size_t i = 1; i <= m; ++i) {
      std::ostringstream local;
      local << "b" << b << "." << block.system.variables()[i - 1];
      std::ostringstream global;
      global << "x" << (b - 1) * m + i;
      out.variable_layout.emplace_back(local.str(), global.str());
    }
  }
  for (std::size_t s = 1; s <= j; ++s) {
    std::ostringstream local;
    local << "slack" << s;
    std::ostringstream global;
    global << "x" << k * m + s;
    out.variable_layout.emplace_back(local.str(), global.str());
  }
  return out;
}

SparseSystem assemble(const ConstructionPlan& plan) {
  const std::size_t n = plan.n;
  if (plan.k < 1 || plan.block_ids.size() != plan.k ||
      plan.k * plan.m + plan.j != n) {
    throw DomainError("construction plan is inconsistent");
  }

  BlockRegistry& registry = default_registry();
  std::vector<std::string> variables;
  variables.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    variables.push_back("x" + std::to_string(i));
  }

  std::vector<SparsePolynomial> polynomials;
  polynomials.reserve(n);
  for (std::size_t b = 0; b < plan.k; ++b) {
    const BlockRecipe& block = registry.by_id(plan.block_ids[b]);
    if (block.m != plan.m) {
      throw DomainError("block '" + block.id +
                        "' does not match the plan's dimension");
    }
    const std::size_t offset = b * plan.m;
    for (const SparsePolynomial& poly : block.system.polynomials()) {
      std::vector<Term> widened;
      widened.reserve(poly.terms().size());
      for (const Term& term : poly.terms()) {
        std::vector<Rational> e(n, 0);
        for (std::size_t i = 0; i < plan.m; ++i) {
          e[offset + i] = term.exponent[i];
        }
        widened.push_back(Term{term.coefficient, ExponentVector(e)});
      }
      polynomials.emplace_back(n, widened);
    }
  }
  for (std::size_t s = 0; s < plan.j; ++s) {
    std::vector<Rational> e(n, 0);
    e[plan.k * plan.m + s] = 1;
    polynomials.emplace_back(
        n, std::vector<Term>{Term{1, ExponentVector(e)},
                             Term{-1, ExponentVector(std::vector<Rational>(n, 0))}});
  }

  SparseSystem system(std::move(variables), std::move(polynomials));

  // The blocks are variable-disjoint and each contributes m+2 monomials
  // sharing the constant; slacks add one monomial each. Anything else means a
  // corrupted registry, which certification downstream could not repair.
  const std::size_t monomials = support(system).size();
  if (monomials != n + plan.k + 1) {
    std::ostringstream msg;
    msg << "assembled support has " << monomials << " monomials, want n+k+1 = "
        << n + plan.k + 1;
    throw Error(msg.str());
  }

  system.attach_plan(std::make_shared<const ConstructionPlan>(plan));
  return system;
}

std::pair<std::size_t, std::size_t> census(const SparseSystem& system) {
  const Support supp = support(system);
  return {supp.size(), affine_span_dim(supp)};
}

}  // namespace fewnomial
