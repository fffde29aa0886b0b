#include "fewnomial/blocks.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "fewnomial/blocks_data.hpp"
#include "fewnomial/io.hpp"
#include "fewnomial/solver.hpp"

namespace fewnomial {

namespace {

// Largest exponent of `variable` across the polynomial's terms. Exponents in
// block systems are nonnegative integers; anything else breaks the schedule.
std::size_t max_power(const SparsePolynomial& poly, std::size_t variable) {
  Rational best = 0;
  for (const Term& term : poly.terms()) {
    const Rational& e = term.exponent[variable];
    if (!is_integer(e) || e < 0) {
      throw MalformedRecipeError(
          "schedule requires nonnegative integer exponents in the eliminated "
          "variable");
    }
    best = std::max(best, e);
  }
  return static_cast<std::size_t>(rational_to_long(best));
}

// Substitutes variable := numerator/denominator into poly and clears the
// denominator: each term c*x^e with x_v-power t becomes
// c * x^{e - t*e_v} * numerator^t * denominator^{M-t}, where M is the largest
// x_v-power in poly. The result has no x_v left (the numerator and denominator
// must not mention it) and equals poly * denominator^M on the positive orthant.
SparsePolynomial substitute_cleared(const SparsePolynomial& poly,
                                    const ScheduleStep& step) {
  const std::size_t arity = poly.arity();
  const std::size_t v = step.variable;
  const std::size_t cap = max_power(poly, v);

  std::vector<SparsePolynomial> numerator_pow;
  numerator_pow.reserve(cap + 1);
  numerator_pow.push_back(SparsePolynomial::constant(arity, 1));
  for (std::size_t t = 1; t <= cap; ++t) {
    numerator_pow.push_back(numerator_pow.back() * step.numerator);
  }

  SparsePolynomial sum(arity, {});
  for (const Term& term : poly.terms()) {
    const std::size_t t =
        static_cast<std::size_t>(rational_to_long(term.exponent[v]));
    const Term base{term.coefficient, term.exponent.with_entry(v, 0)};
    const Term den = term_pow(step.denominator, cap - t);
    sum = sum + SparsePolynomial(arity, {base}) * numerator_pow[t] *
                    SparsePolynomial(arity, {den});
  }
  return sum;
}

// Divides out the largest monomial dividing every term. Pure variable powers
// never vanish on the positive orthant, so the positive roots are unchanged.
SparsePolynomial strip_common_monomial(const SparsePolynomial& poly) {
  if (poly.terms().empty()) return poly;
  const std::size_t arity = poly.arity();
  ExponentVector common = poly.terms().front().exponent;
  for (const Term& term : poly.terms()) {
    for (std::size_t i = 0; i < arity; ++i) {
      common = common.with_entry(
          i, std::min(common[i], term.exponent[i]));
    }
  }
  std::vector<Term> stripped;
  stripped.reserve(poly.terms().size());
  for (const Term& term : poly.terms()) {
    ExponentVector e = term.exponent;
    for (std::size_t i = 0; i < arity; ++i) {
      e = e.with_entry(i, e[i] - common[i]);
    }
    stripped.push_back(Term{term.coefficient, e});
  }
  return SparsePolynomial(arity, stripped);
}

[[noreturn]] void reject(const std::string& id, const std::string& invariant) {
  throw BlockRejectedError("block '" + id + "' rejected: " + invariant);
}

// Full verification chain run at registration time. Every stored block has
// passed all of it, so downstream construction can trust recipes blindly.
void verify_recipe(const BlockRecipe& recipe) {
  if (recipe.id.empty()) reject("(unnamed)", "id must be nonempty");
  if (recipe.m == 0) reject(recipe.id, "dimension m must be positive");
  if (!recipe.system.is_square() || recipe.system.arity() != recipe.m) {
    reject(recipe.id, "system must be square with m equations in m variables");
  }
  if (recipe.principal_variable >= recipe.m) {
    reject(recipe.id, "principal variable index out of range");
  }
  if (recipe.expected_count != recipe.m + 1) {
    std::ostringstream msg;
    msg << "expected_count " << recipe.expected_count << " must equal m+1 = "
        << recipe.m + 1 << " (the maximum an m-variable system with m+2 "
        << "monomials can attain)";
    reject(recipe.id, msg.str());
  }

  const Support monomials = support(recipe.system);
  if (monomials.size() != recipe.m + 2) {
    std::ostringstream msg;
    msg << "monomial census: support has " << monomials.size()
        << " monomials, want m+2 = " << recipe.m + 2;
    reject(recipe.id, msg.str());
  }
  if (monomials.find(ExponentVector(std::vector<Rational>(recipe.m, 0))) ==
      monomials.end()) {
    reject(recipe.id, "monomial census: support must contain the constant 1");
  }

  UnivariatePolynomial recomputed;
  try {
    recomputed = eliminate(recipe);
  } catch (const MalformedRecipeError& e) {
    reject(recipe.id, std::string("schedule does not eliminate: ") + e.what());
  }
  if (recipe.eliminant.is_zero() ||
      recomputed.monic() != recipe.eliminant.monic()) {
    reject(recipe.id,
           "stored eliminant disagrees with the schedule's elimination");
  }
  if (UnivariatePolynomial::gcd(recomputed, recomputed.derivative()).degree() !=
      0) {
    reject(recipe.id, "eliminant has repeated roots");
  }
  if (recomputed.degree() < static_cast<int>(recipe.expected_count)) {
    reject(recipe.id, "eliminant degree below the claimed solution count");
  }

  try {
    const SolutionSet set = solve_block(recipe, kDefaultDigits);
    if (set.solutions.size() != recipe.expected_count) {
      reject(recipe.id, "certified solution count disagrees with claim");
    }
  } catch (const CertificationError& e) {
    reject(recipe.id, std::string("solution certification failed: ") + e.what());
  }
}

bool same_recipe(const BlockRecipe& a, const BlockRecipe& b) {
  return a.id == b.id && a.m == b.m && a.system == b.system &&
         a.eliminant == b.eliminant && a.expected_count == b.expected_count &&
         a.principal_variable == b.principal_variable &&
         a.schedule.size() == b.schedule.size() &&
         std::equal(a.schedule.begin(), a.schedule.end(), b.schedule.begin(),
                    [](const ScheduleStep& s, const ScheduleStep& t) {
                      return s.equation == t.equation &&
                             s.variable == t.variable &&
                             s.numerator == t.numerator &&
                             s.denominator.coefficient ==
                                 t.denominator.coefficient &&
                             s.denominator.exponent == t.denominator.exponent;
                    });
}

}  // namespace

UnivariatePolynomial eliminate(const BlockRecipe& recipe) {
  const std::size_t m = recipe.m;
  if (!recipe.system.is_square() || recipe.system.arity() != m || m == 0) {
    throw MalformedRecipeError("block system must be square with arity m");
  }
  if (recipe.schedule.size() + 1 != m) {
    throw MalformedRecipeError(
        "schedule must eliminate all variables but the principal one");
  }

  std::vector<SparsePolynomial> working = recipe.system.polynomials();
  std::vector<bool> consumed(m, false);
  std::vector<bool> eliminated(m, false);

  for (const ScheduleStep& step : recipe.schedule) {
    if (step.equation >= m || consumed[step.equation]) {
      throw MalformedRecipeError("schedule reuses or misses an equation");
    }
    if (step.variable >= m || eliminated[step.variable] ||
        step.variable == recipe.principal_variable) {
      throw MalformedRecipeError(
          "schedule eliminates a variable it must not");
    }
    if (step.denominator.coefficient == 0) {
      throw MalformedRecipeError("schedule step has a zero denominator");
    }
    if (max_power(step.numerator, step.variable) != 0 ||
        step.denominator.exponent[step.variable] != 0) {
      throw MalformedRecipeError(
          "substitution for a variable must not mention that variable");
    }

    // The step claims working[equation] = 0 is equivalent to
    // variable = numerator/denominator; substituting back in must therefore
    // annihilate the source equation identically.
    if (!substitute_cleared(working[step.equation], step).terms().empty()) {
      throw MalformedRecipeError(
          "schedule step does not solve its source equation");
    }

    for (std::size_t e = 0; e < m; ++e) {
      if (e == step.equation || consumed[e]) continue;
      working[e] = substitute_cleared(working[e], step);
      if (max_power(working[e], step.variable) != 0) {
        throw MalformedRecipeError(
            "substitution failed to eliminate its variable");
      }
    }
    consumed[step.equation] = true;
    eliminated[step.variable] = true;
  }

  std::size_t last = m;
  for (std::size_t e = 0; e < m; ++e) {
    if (!consumed[e]) last = e;
  }
  SparsePolynomial residual = strip_common_monomial(working[last]);

  UnivariatePolynomial eliminant =
      to_univariate(residual, recipe.principal_variable);
  if (eliminant.is_zero()) {
    throw MalformedRecipeError("elimination produced the zero polynomial");
  }
  return eliminant.primitive();
}

std::string BlockRegistry::register_block(const BlockRecipe& recipe) {
  const auto existing = by_id_.find(recipe.id);
  if (existing != by_id_.end()) {
    if (same_recipe(existing->second, recipe)) return recipe.id;
    reject(recipe.id, "id already registered with a different recipe");
  }
  verify_recipe(recipe);
  by_id_.emplace(recipe.id, recipe);
  dimension_index_.emplace(recipe.m, recipe.id);  // first of each m wins
  return recipe.id;
}

bool BlockRegistry::has_dimension(std::size_t m) const {
  return dimension_index_.count(m) != 0;
}

const BlockRecipe& BlockRegistry::by_dimension(std::size_t m) const {
  const auto it = dimension_index_.find(m);
  if (it == dimension_index_.end()) {
    std::ostringstream msg;
    msg << "no block of dimension " << m
        << " is registered; provide one via BlockRegistry::register_block";
    throw UnsupportedBlockError(msg.str());
  }
  return by_id_.at(it->second);
}

const BlockRecipe& BlockRegistry::by_id(const std::string& id) const {
  const auto it = by_id_.find(id);
  if (it == by_id_.end()) {
    throw UnsupportedBlockError(
        "no block registered under id '" + id +
        "'; provide one via BlockRegistry::register_block");
  }
  return it->second;
}

std::vector<std::string> BlockRegistry::ids() const {
  std::vector<std::string> out;
  out.reserve(by_id_.size());
  for (const auto& [id, recipe] : by_id_) out.push_back(id);
  return out;
}

BlockRegistry& default_registry() {
  static BlockRegistry registry = [] {
    BlockRegistry r;
    r.register_block(io::block_from_json(detail::kBlockM1Json));
    r.register_block(io::block_from_json(detail::kBlockM2Json));
    r.register_block(io::block_from_json(detail::kBlockM3Json));
    return r;
  }();
  return registry;
}

const BlockRecipe& builtin_block(std::size_t m) {
  if (m < 1 || m > 3) {
    std::ostringstream msg;
    msg << "no builtin block of dimension " << m
        << "; register one via BlockRegistry::register_block";
    throw UnsupportedBlockError(msg.str());
  }
  return default_registry().by_dimension(m);
}

}  // namespace fewnomial
