#include "fewnomial/solver.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <thread>
#include <utility>

#include "fewnomial/construct.hpp"

namespace fewnomial {

namespace {

// Primitive integer form scaled by a POSITIVE rational only, so every sign a
// Sturm sequence cares about is preserved (primitive() itself flips negative
// leading coefficients).
UnivariatePolynomial positive_primitive(const UnivariatePolynomial& p) {
  if (p.is_zero()) return p;
  UnivariatePolynomial q = p.primitive();
  return p.leading() < 0 ? q * Rational(-1) : q;
}

// Squarefree part with any root at the origin stripped: same distinct roots
// in (0, inf), nonzero at 0, all roots simple.
UnivariatePolynomial prepared(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw DomainError("cannot count roots of the zero polynomial");
  UnivariatePolynomial q = p.squarefree_part();
  std::size_t shift = 0;
  while (q.coeff(shift) == 0) ++shift;
  if (shift > 0) {
    std::vector<Rational> coeffs(q.coefficients().begin() + static_cast<long>(shift),
                                 q.coefficients().end());
    q = UnivariatePolynomial(std::move(coeffs));
  }
  return q;
}

std::vector<UnivariatePolynomial> sturm_chain(const UnivariatePolynomial& q) {
  std::vector<UnivariatePolynomial> chain;
  chain.push_back(q);
  if (q.degree() < 1) return chain;
  chain.push_back(positive_primitive(q.derivative()));
  while (chain.back().degree() >= 1) {
    auto [quot, rem] =
        UnivariatePolynomial::divmod(chain[chain.size() - 2], chain.back());
    (void)quot;
    if (rem.is_zero()) break;  // non-squarefree input; callers pass prepared()
    chain.push_back(positive_primitive(rem * Rational(-1)));
  }
  return chain;
}

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

std::size_t variations_at(const std::vector<UnivariatePolynomial>& chain, const Rational& x) {
  std::size_t flips = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_of(p.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++flips;
    last = s;
  }
  return flips;
}

std::size_t variations_at_infinity(const std::vector<UnivariatePolynomial>& chain) {
  std::size_t flips = 0;
  int last = 0;
  for (const auto& p : chain) {
    if (p.is_zero()) continue;
    const int s = sign_of(p.leading());
    if (last != 0 && s != last) ++flips;
    last = s;
  }
  return flips;
}

// Strict upper bound on the absolute value of every root: 1 + max |a_i/a_d|.
Rational cauchy_bound(const UnivariatePolynomial& p) {
  Rational max_ratio(0);
  const Rational& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    const Rational ratio = abs(p.coeff(static_cast<std::size_t>(i)) / lead);
    if (ratio > max_ratio) max_ratio = ratio;
  }
  return max_ratio + 1;
}

// Strictly positive lower bound below every positive root, via the Cauchy
// bound of the reversed polynomial (whose roots are the reciprocals).
Rational positive_root_floor(const UnivariatePolynomial& p) {
  std::vector<Rational> reversed(p.coefficients().rbegin(), p.coefficients().rend());
  return Rational(1) / cauchy_bound(UnivariatePolynomial(std::move(reversed)));
}

// A point in (lo, hi) that is not a root of q, biased toward the midpoint.
Rational non_root_split(const UnivariatePolynomial& q, const Rational& lo, const Rational& hi) {
  Rational delta = (hi - lo) / 2;
  Rational mid = lo + delta;
  while (q.evaluate(mid) == 0) {
    delta /= 2;
    mid = lo + delta;
  }
  return mid;
}

struct PreparedRoots {
  UnivariatePolynomial q;
  std::vector<UnivariatePolynomial> chain;
  Rational floor;  // no roots at or below this
  Rational bound;  // no roots at or above this
};

PreparedRoots prepare_roots(const UnivariatePolynomial& p) {
  PreparedRoots out;
  out.q = prepared(p);
  out.chain = sturm_chain(out.q);
  if (out.q.degree() >= 1) {
    out.floor = positive_root_floor(out.q);
    out.bound = cauchy_bound(out.q);
  } else {
    out.floor = Rational(1, 2);
    out.bound = Rational(1);
  }
  return out;
}

std::vector<Integer> positive_divisors(const Integer& value) {
  static const Integer kCap = Integer(1000000000);  // keep trial division cheap
  Integer v = abs(value);
  std::vector<Integer> divisors;
  if (v == 0 || v > kCap) return divisors;  // empty = give up on the shortcut
  for (Integer i = 1; i * i <= v; ++i) {
    if (v % i == 0) {
      divisors.push_back(i);
      if (i * i != v) divisors.push_back(v / i);
    }
  }
  return divisors;
}

// Exact rational root in (lo, hi), if one exists: candidates a/b with
// a | constant term and b | leading term of the primitive polynomial.
std::optional<Rational> rational_root_in(const UnivariatePolynomial& q, const Rational& lo,
                                         const Rational& hi) {
  const auto numerators = positive_divisors(numerator(q.coeff(0)));
  const auto denominators = positive_divisors(numerator(q.leading()));
  for (const auto& a : numerators) {
    for (const auto& b : denominators) {
      const Rational candidate(a, b);
      if (candidate <= lo || candidate >= hi) continue;
      if (q.evaluate(candidate) == 0) return candidate;
    }
  }
  return std::nullopt;
}

Real pow10(long exponent) {
  const Integer mag = integer_pow(Integer(10), static_cast<unsigned>(std::abs(exponent)));
  return exponent >= 0 ? Real(mag) : Real(1) / Real(mag);
}

// Residual scale of q near x: sum |a_i| * max(1,|x|)^deg, so the refinement
// contract |q(r)| < 10^(4-digits) * scale is meaningful for any coefficient
// magnitude.
Real residual_scale(const UnivariatePolynomial& q, const Real& x) {
  Real coeff_sum(0);
  for (const auto& c : q.coefficients()) coeff_sum += to_real(abs(c));
  Real base = abs(x);
  if (base < 1) base = Real(1);
  Real growth(1);
  for (int i = 0; i < q.degree(); ++i) growth *= base;
  return coeff_sum * growth;
}

}  // namespace

std::size_t sturm_positive_count(const UnivariatePolynomial& p) {
  const PreparedRoots pr = prepare_roots(p);
  if (pr.q.degree() < 1) return 0;
  return variations_at(pr.chain, Rational(0)) - variations_at_infinity(pr.chain);
}

std::vector<IsolatingInterval> isolate_positive_roots(const UnivariatePolynomial& p) {
  const PreparedRoots pr = prepare_roots(p);
  std::vector<IsolatingInterval> intervals;
  if (pr.q.degree() < 1) return intervals;

  struct Segment {
    Rational lo, hi;
    std::size_t v_lo, v_hi;
  };
  // Depth-first, left segment first, so output comes out in increasing order.
  std::vector<Segment> stack;
  const std::size_t v_floor = variations_at(pr.chain, pr.floor);
  const std::size_t v_bound = variations_at(pr.chain, pr.bound);
  stack.push_back({pr.floor, pr.bound, v_floor, v_bound});
  while (!stack.empty()) {
    Segment seg = stack.back();
    stack.pop_back();
    const std::size_t count = seg.v_lo - seg.v_hi;
    if (count == 0) continue;
    if (count == 1) {
      const bool sign_change = sign_of(pr.q.evaluate(seg.lo)) * sign_of(pr.q.evaluate(seg.hi)) < 0;
      intervals.push_back({seg.lo, seg.hi, sign_change});
      continue;
    }
    const Rational mid = non_root_split(pr.q, seg.lo, seg.hi);
    const std::size_t v_mid = variations_at(pr.chain, mid);
    // Right half is pushed first so the left half is processed first.
    stack.push_back({mid, seg.hi, v_mid, seg.v_hi});
    stack.push_back({seg.lo, mid, seg.v_lo, v_mid});
  }
  return intervals;
}

RefinedRoot refine_root(const UnivariatePolynomial& p, const IsolatingInterval& interval,
                        unsigned digits) {
  const UnivariatePolynomial q = prepared(p);
  if (q.degree() < 1 || interval.lo <= 0 || interval.hi <= interval.lo) {
    throw DomainError("refine_root needs a positive isolating interval of a nonconstant polynomial");
  }

  // Exact short-circuit: a rational root certifies with residual exactly zero.
  if (auto exact = rational_root_in(q, interval.lo, interval.hi)) {
    PrecisionScope scope(digits);
    return RefinedRoot{Real(*exact), std::move(exact)};
  }

  // Exact bisection down to 1/1024 of the interval puts the midpoint inside
  // the Newton basin for a simple root.
  Rational lo = interval.lo;
  Rational hi = interval.hi;
  int sign_lo = sign_of(q.evaluate(lo));
  const Rational basin_width = (hi - lo) / 1024;
  while (hi - lo > basin_width) {
    const Rational mid = (lo + hi) / 2;
    const int sign_mid = sign_of(q.evaluate(mid));
    if (sign_mid == 0) {
      PrecisionScope scope(digits);
      return RefinedRoot{Real(mid), mid};
    }
    if (sign_mid == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  const unsigned working = digits + kGuardDigits;
  PrecisionScope scope(working);
  const UnivariatePolynomial dq = q.derivative();
  Real x = to_real((lo + hi) / 2);
  const Real step_target = abs(x) * pow10(-static_cast<long>(working) + 5);
  bool converged = false;
  for (int iter = 0; iter < 200; ++iter) {
    const Real fx = q.evaluate(x);
    if (fx == 0) {
      converged = true;
      break;
    }
    const Real fdx = dq.evaluate(x);
    if (fdx == 0) break;  // inflection hit: let bisection finish the job
    const Real step = fx / fdx;
    x -= step;
    // Floating values are dyadic rationals, so the bracket test is exact.
    const Rational here = x.convert_to<Rational>();
    if (here <= lo || here >= hi) break;  // left the bracket
    if (abs(step) < step_target) {
      converged = true;
      break;
    }
  }

  if (converged) {
    // Accept only a value that provably sits in the interval with a residual
    // matching the contract; otherwise fall through to pure bisection.
    const Rational here = x.convert_to<Rational>();
    const Real limit = pow10(4 - static_cast<long>(digits)) * residual_scale(q, x);
    if (here > lo && here < hi && abs(q.evaluate(x)) < limit) {
      return RefinedRoot{round_to_digits(x, digits), std::nullopt};
    }
  }

  // Guaranteed fallback: exact bisection to the target width.
  Rational width_target = abs((lo + hi) / 2);
  if (width_target < 1) width_target = 1;
  width_target /= Rational(integer_pow(Integer(10), working));
  while (hi - lo > width_target) {
    const Rational mid = (lo + hi) / 2;
    const int sign_mid = sign_of(q.evaluate(mid));
    if (sign_mid == 0) return RefinedRoot{Real(mid), mid};
    if (sign_mid == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return RefinedRoot{round_to_digits(to_real((lo + hi) / 2), digits), std::nullopt};
}

namespace {

// certify() with the working precision already set by the caller. Worker
// threads use this directly: nobody touches the process-wide precision after
// the fan-out, which is what keeps parallel runs bit-identical.
Certificate certify_at_current_precision(const SparseSystem& system,
                                         const std::vector<Real>& point) {
  if (!system.is_square()) throw ShapeError("certification requires a square system");
  if (point.size() != system.arity()) {
    throw ShapeError("point length does not match the system");
  }
  Certificate cert;
  cert.positive = std::all_of(point.begin(), point.end(), [](const Real& x) { return x > 0; });
  if (!cert.positive) {
    cert.residual_norm = std::numeric_limits<Real>::infinity();
    cert.jacobian_det = Real(0);
    return cert;
  }
  cert.residual_norm = Real(0);
  for (const auto& poly : system.polynomials()) {
    const Real value = abs(poly.evaluate(point));
    if (value > cert.residual_norm) cert.residual_norm = value;
  }
  const auto jac = jacobian_matrix(system, point);
  Real scale(1);
  for (const auto& row : jac) {
    Real row_max(0);
    for (const auto& entry : row) {
      const Real mag = abs(entry);
      if (mag > row_max) row_max = mag;
    }
    scale *= row_max;
  }
  cert.jacobian_det = jacobian_det(system, point);
  cert.nondegenerate = abs(cert.jacobian_det) > scale * pow10(-8);
  return cert;
}

// Back-substitutes one refined principal root through the schedule, exactly
// when the root itself is exact.
std::vector<Real> back_substitute(const BlockRecipe& recipe, const RefinedRoot& root,
                                  unsigned digits) {
  const std::size_t m = recipe.m;
  std::vector<Real> point(m, Real(1));
  std::vector<std::optional<Rational>> exact(m);
  std::vector<bool> known(m, false);
  point[recipe.principal_variable] = root.value;
  exact[recipe.principal_variable] = root.exact;
  known[recipe.principal_variable] = true;

  for (auto it = recipe.schedule.rbegin(); it != recipe.schedule.rend(); ++it) {
    const ScheduleStep& step = *it;
    // The substitution may only mention coordinates recovered later in this
    // loop (or the principal variable); anything else is a broken schedule.
    const auto check_known = [&](const ExponentVector& e) {
      for (std::size_t v = 0; v < m; ++v) {
        if (e[v] != 0 && !known[v]) {
          throw MalformedRecipeError("schedule step depends on an uneliminated variable");
        }
      }
    };
    for (const auto& term : step.numerator.terms()) check_known(term.exponent);
    check_known(step.denominator.exponent);

    bool exact_path = root.exact.has_value() && step.denominator.exponent.all_integer();
    for (const auto& term : step.numerator.terms()) {
      exact_path = exact_path && term.exponent.all_integer();
    }
    if (exact_path) {
      for (std::size_t v = 0; v < m; ++v) {
        if (known[v] && !exact[v].has_value()) exact_path = false;
      }
    }

    if (exact_path) {
      std::vector<Rational> rational_point(m, Rational(1));
      for (std::size_t v = 0; v < m; ++v) {
        if (known[v]) rational_point[v] = *exact[v];
      }
      const Rational num = step.numerator.evaluate_exact(rational_point);
      Rational den = step.denominator.coefficient;
      for (std::size_t v = 0; v < m; ++v) {
        const Rational& e = step.denominator.exponent[v];
        if (e == 0) continue;
        const long deg = rational_to_long(e);
        for (long i = 0; i < std::abs(deg); ++i) {
          if (deg > 0) {
            den *= rational_point[v];
          } else {
            den /= rational_point[v];
          }
        }
      }
      if (den == 0) throw MalformedRecipeError("schedule denominator vanished");
      const Rational value = num / den;
      exact[step.variable] = value;
      point[step.variable] = Real(value);
    } else {
      const Real num = step.numerator.evaluate(point);
      Real den(step.denominator.coefficient);
      for (std::size_t v = 0; v < m; ++v) {
        const Rational& e = step.denominator.exponent[v];
        if (e != 0) den *= real_pow(point[v], e);
      }
      if (den == 0) throw MalformedRecipeError("schedule denominator vanished");
      point[step.variable] = num / den;
      exact[step.variable] = std::nullopt;
    }
    known[step.variable] = true;
  }

  for (std::size_t v = 0; v < m; ++v) {
    if (!known[v]) throw MalformedRecipeError("schedule leaves a variable unrecovered");
    point[v] = round_to_digits(point[v], digits);
  }
  return point;
}

Real distinctness_gap() { return pow10(-10); }

}  // namespace

Certificate certify(const SparseSystem& system, const std::vector<Real>& point,
                    unsigned digits) {
  PrecisionScope scope(digits);
  return certify_at_current_precision(system, point);
}

SolutionSet solve_block(const BlockRecipe& recipe, unsigned digits) {
  std::vector<IsolatingInterval> intervals;
  std::vector<RefinedRoot> roots;
  {
    PrecisionScope scope(digits + kGuardDigits);
    intervals = isolate_positive_roots(recipe.eliminant);
    if (intervals.size() != recipe.expected_count) {
      throw CertificationError("eliminant has " + std::to_string(intervals.size()) +
                               " positive roots, expected " +
                               std::to_string(recipe.expected_count));
    }
    roots.reserve(intervals.size());
    for (const auto& interval : intervals) {
      roots.push_back(refine_root(recipe.eliminant, interval, digits + kGuardDigits));
    }
  }

  PrecisionScope scope(digits);
  SolutionSet set;
  set.system = recipe.system;
  const Real tolerance = pow10(4 - static_cast<long>(digits));
  for (const auto& root : roots) {
    const std::vector<Real> point = back_substitute(recipe, root, digits);
    const Certificate cert = certify_at_current_precision(recipe.system, point);
    if (!cert.positive) {
      throw CertificationError("block solution left the positive orthant");
    }
    if (!(cert.residual_norm < tolerance)) {
      throw CertificationError("block solution residual exceeds tolerance");
    }
    if (!cert.nondegenerate) {
      throw CertificationError("block solution is degenerate");
    }
    set.solutions.push_back(CertifiedSolution{point, cert.residual_norm, cert.jacobian_det, digits});
  }
  for (std::size_t a = 0; a + 1 < set.solutions.size(); ++a) {
    for (std::size_t b = a + 1; b < set.solutions.size(); ++b) {
      Real gap(0);
      for (std::size_t v = 0; v < recipe.m; ++v) {
        const Real d = abs(set.solutions[a].coordinates[v] - set.solutions[b].coordinates[v]);
        if (d > gap) gap = d;
      }
      if (!(gap > distinctness_gap())) {
        throw CertificationError("block solutions are not pairwise distinct");
      }
    }
  }
  set.count_claimed = recipe.expected_count;
  return set;
}

SolutionSet solve_assembled(const SparseSystem& system, unsigned digits, unsigned threads) {
  const auto plan_ptr = system.plan();
  if (!plan_ptr) {
    throw DomainError("solve_assembled needs a system carrying a construction plan");
  }
  const ConstructionPlan& plan = *plan_ptr;

  // Solve each distinct block once; identical ids share the work.
  std::map<std::string, SolutionSet> block_solutions;
  for (const auto& id : plan.block_ids) {
    if (block_solutions.contains(id)) continue;
    block_solutions.emplace(id, solve_block(default_registry().by_id(id), digits));
  }

  std::size_t total = 1;
  std::vector<const SolutionSet*> per_block;
  per_block.reserve(plan.block_ids.size());
  for (const auto& id : plan.block_ids) {
    per_block.push_back(&block_solutions.at(id));
    total *= per_block.back()->solutions.size();
  }

  PrecisionScope scope(digits);
  const Real tolerance = pow10(4 - static_cast<long>(digits));
  const Real one(1);
  std::vector<CertifiedSolution> solutions(total);
  std::vector<std::string> failures(total);

  const auto solve_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t index = begin; index < end; ++index) {
      std::vector<Real> point(plan.n, one);
      // Mixed-radix decomposition, last block fastest, so the order is the
      // lexicographic product of the per-block orders.
      std::size_t rest = index;
      for (std::size_t b = plan.block_ids.size(); b-- > 0;) {
        const auto& block_set = *per_block[b];
        const std::size_t which = rest % block_set.solutions.size();
        rest /= block_set.solutions.size();
        const auto& coords = block_set.solutions[which].coordinates;
        for (std::size_t v = 0; v < plan.m; ++v) point[b * plan.m + v] = coords[v];
      }
      const Certificate cert = certify_at_current_precision(system, point);
      if (!cert.positive || !cert.nondegenerate || !(cert.residual_norm < tolerance)) {
        failures[index] = "product point " + std::to_string(index) + " failed certification";
        continue;
      }
      solutions[index] = CertifiedSolution{std::move(point), cert.residual_norm,
                                           cert.jacobian_det, digits};
    }
  };

  if (threads <= 1 || total < 2) {
    solve_range(0, total);
  } else {
    const std::size_t worker_count = std::min<std::size_t>(threads, total);
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    const std::size_t chunk = (total + worker_count - 1) / worker_count;
    for (std::size_t w = 0; w < worker_count; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      workers.emplace_back(solve_range, begin, end);
    }
    for (auto& worker : workers) worker.join();
  }

  for (const auto& failure : failures) {
    if (!failure.empty()) throw CertificationError(failure);
  }

  SolutionSet set;
  set.system = system;
  set.solutions = std::move(solutions);
  // The claim is whatever the plan carries, not what we found: a disagreement
  // between the two is exactly what callers must be able to detect.
  const Integer claimed = plan_ptr->predicted;
  if (claimed >= 0 && claimed <= Integer(std::numeric_limits<std::size_t>::max())) {
    set.count_claimed = claimed.convert_to<std::size_t>();
  } else {
    set.count_claimed = std::numeric_limits<std::size_t>::max();
  }
  return set;
}

}  // namespace fewnomial
