#include "fewnomial/bounds.hpp"

#include <mpfr.h>

#include <utility>

namespace fewnomial {

namespace {

// The factor folded into a plain rational multiplier of (e^2+3), so that two
// tagged values compare exactly whenever both carry the transcendental.
Rational transcendental_multiplier(TranscendentalFactor factor) {
  switch (factor) {
    case TranscendentalFactor::kNone:
      return Rational(1);
    case TranscendentalFactor::kE2P3Over4:
      return Rational(1, 4);
    case TranscendentalFactor::kE2P3Over8:
      return Rational(1, 8);
  }
  throw DomainError("unknown transcendental factor");
}

int sign_of(const Rational& value) {
  if (value > 0) return 1;
  if (value < 0) return -1;
  return 0;
}

// Sign of r * (e^2+3) - s for rationals r != 0, s with matching signs, decided
// by directed-rounding interval arithmetic at escalating precision. Exact
// equality is impossible: e^2 is transcendental, so r*(e^2+3) is irrational.
int compare_scaled_e2p3(const Rational& r, const Rational& s) {
  for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t)1 << 20; prec *= 2) {
    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    // e^2 + 3, rounded outward.
    mpfr_set_si(lo, 1, MPFR_RNDD);
    mpfr_exp(lo, lo, MPFR_RNDD);
    mpfr_mul(lo, lo, lo, MPFR_RNDD);
    mpfr_add_si(lo, lo, 3, MPFR_RNDD);
    mpfr_set_si(hi, 1, MPFR_RNDU);
    mpfr_exp(hi, hi, MPFR_RNDU);
    mpfr_mul(hi, hi, hi, MPFR_RNDU);
    mpfr_add_si(hi, hi, 3, MPFR_RNDU);
    // Multiply by r; a negative r swaps the endpoints.
    const mpq_srcptr rq = r.backend().data();
    if (r > 0) {
      mpfr_mul_q(lo, lo, rq, MPFR_RNDD);
      mpfr_mul_q(hi, hi, rq, MPFR_RNDU);
    } else {
      mpfr_swap(lo, hi);
      mpfr_mul_q(lo, lo, rq, MPFR_RNDD);
      mpfr_mul_q(hi, hi, rq, MPFR_RNDU);
    }
    const int lo_cmp = mpfr_cmp_q(lo, s.backend().data());
    const int hi_cmp = mpfr_cmp_q(hi, s.backend().data());
    mpfr_clear(lo);
    mpfr_clear(hi);
    if (lo_cmp > 0) return 1;
    if (hi_cmp < 0) return -1;
  }
  throw DomainError("interval comparison failed to separate after escalation");
}

BoundValue with_factor(Integer exact, TranscendentalFactor factor) {
  return BoundValue{Rational(std::move(exact)), factor};
}

Integer two_pow_binom(unsigned n, unsigned k) {
  const Integer b = binomial(n, k);
  return integer_pow(Integer(2), b.convert_to<unsigned>());
}

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace

Real BoundValue::approx(unsigned digits) const {
  PrecisionScope scope(digits + kGuardDigits);
  Real value(exact_part);
  if (factor != TranscendentalFactor::kNone) {
    const Real e = exp(Real(1));
    Real constant = e * e + 3;
    constant /= factor == TranscendentalFactor::kE2P3Over4 ? 4 : 8;
    value *= constant;
  }
  return round_to_digits(value, digits);
}

Order compare(const BoundValue& a, const BoundValue& b) {
  const Rational ra = a.exact_part * transcendental_multiplier(a.factor);
  const Rational rb = b.exact_part * transcendental_multiplier(b.factor);
  const bool ta = a.factor != TranscendentalFactor::kNone && ra != 0;
  const bool tb = b.factor != TranscendentalFactor::kNone && rb != 0;
  if (ta == tb) {
    // Same carrier (both rational, or both rational multiples of e^2+3 with
    // the positive constant cancelling): exact comparison.
    if (ra == rb) return Order::kEqual;
    return ra < rb ? Order::kLess : Order::kGreater;
  }
  // One side carries e^2+3, the other is plain rational. Signs first: the
  // transcendental constant is positive, so the multiplier's sign is the
  // value's sign.
  const int sa = sign_of(ra);
  const int sb = sign_of(rb);
  if (sa != sb) return sa < sb ? Order::kLess : Order::kGreater;
  if (sa == 0) return Order::kEqual;
  const int cmp = ta ? compare_scaled_e2p3(ra, rb) : -compare_scaled_e2p3(rb, ra);
  return cmp < 0 ? Order::kLess : Order::kGreater;
}

std::string factor_name(TranscendentalFactor factor) {
  switch (factor) {
    case TranscendentalFactor::kNone:
      return "none";
    case TranscendentalFactor::kE2P3Over4:
      return "(e^2+3)/4";
    case TranscendentalFactor::kE2P3Over8:
      return "(e^2+3)/8";
  }
  throw DomainError("unknown transcendental factor");
}

Integer lower_bound(std::size_t n, std::size_t k) {
  require_positive(k, "k");
  if (n < k) throw DomainError("the constructed lower bound needs n >= k");
  return integer_pow(Integer((n + k) / k), static_cast<unsigned>(k));
}

Integer bihan_exact_k1(std::size_t n) {
  require_positive(n, "n");
  return Integer(n) + 1;
}

BoundValue bs_solution_bound(std::size_t n, std::size_t k) {
  require_positive(n, "n");
  Integer exact = two_pow_binom(static_cast<unsigned>(k), 2) *
                  integer_pow(Integer(n), static_cast<unsigned>(k));
  return with_factor(std::move(exact), TranscendentalFactor::kE2P3Over4);
}

BoundValue khovanskii_solution_bound(std::size_t n, std::size_t k) {
  require_positive(n, "n");
  const unsigned nk = static_cast<unsigned>(n + k);
  Integer exact = two_pow_binom(nk, 2) * integer_pow(Integer(n) + 1, nk);
  return with_factor(std::move(exact), TranscendentalFactor::kNone);
}

BoundValue kappa_upper(std::size_t n, std::size_t k) {
  require_positive(n, "n");
  Integer exact = two_pow_binom(static_cast<unsigned>(k), 2) *
                  integer_pow(Integer(n), static_cast<unsigned>(k));
  return with_factor(std::move(exact), TranscendentalFactor::kE2P3Over8);
}

BoundValue lemma3_sum(std::size_t n, std::size_t k) {
  require_positive(n, "n");
  Integer exact(0);
  for (std::size_t i = 0; i < n; ++i) {
    exact += binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(i)) *
             numerator(kappa_upper(n - i, k + 1).exact_part);
  }
  return with_factor(std::move(exact), TranscendentalFactor::kE2P3Over8);
}

BoundValue theorem2_bound(std::size_t n, std::size_t k) {
  require_positive(n, "n");
  Integer exact = two_pow_binom(static_cast<unsigned>(k + 1), 2) *
                  integer_pow(Integer(2), static_cast<unsigned>(n)) *
                  integer_pow(Integer(n), static_cast<unsigned>(k + 1));
  return with_factor(std::move(exact), TranscendentalFactor::kE2P3Over4);
}

BoundValue singular_bound(std::size_t n, std::size_t k) {
  BoundValue doubled = theorem2_bound(n, k);
  doubled.exact_part *= 2;
  return doubled;
}

BoundValue full_support_bound(std::size_t n, std::size_t k) {
  require_positive(n, "n");
  Integer exact = two_pow_binom(static_cast<unsigned>(k), 2) *
                  integer_pow(Integer(2), static_cast<unsigned>(n)) *
                  integer_pow(Integer(n), static_cast<unsigned>(k));
  return with_factor(std::move(exact), TranscendentalFactor::kE2P3Over4);
}

BoundValue khovanskii_betti_bound(std::size_t n, std::size_t k) {
  require_positive(n, "n");
  const unsigned nk = static_cast<unsigned>(n + k);
  const Integer base = 2 * Integer(n) * Integer(n) - Integer(n) + 1;
  Integer exact = integer_pow(base, nk) *
                  integer_pow(2 * Integer(n), static_cast<unsigned>(n - 1)) *
                  two_pow_binom(nk, 2);
  return with_factor(std::move(exact), TranscendentalFactor::kNone);
}

BoundValue lrw_component_bound(std::size_t n, std::size_t k) {
  require_positive(n, "n");
  const unsigned nk1 = static_cast<unsigned>(n + k + 1);
  Integer exact = Integer(n) * integer_pow(Integer(n) + 1, nk1) *
                  integer_pow(Integer(2), static_cast<unsigned>(n - 1)) *
                  two_pow_binom(nk1, 2);
  return with_factor(std::move(exact), TranscendentalFactor::kNone);
}

BoundValue perrucci_bound(std::size_t n, std::size_t k) {
  require_positive(n, "n");
  const unsigned nk = static_cast<unsigned>(n + k);
  Integer exact = integer_pow(Integer(n) + 1, nk) * 2 * two_pow_binom(nk, 2);
  return with_factor(std::move(exact), TranscendentalFactor::kNone);
}

BoundReport report(std::size_t n, std::size_t k, unsigned digits) {
  require_positive(n, "n");
  BoundReport rep;
  rep.n = n;
  rep.k = k;
  rep.digits = digits;

  rep.entries.emplace("bs_solution", bs_solution_bound(n, k));
  rep.entries.emplace("khovanskii_solution", khovanskii_solution_bound(n, k));
  rep.entries.emplace("kappa_upper", kappa_upper(n, k));
  rep.entries.emplace("lemma3_sum", lemma3_sum(n, k));
  rep.entries.emplace("theorem2", theorem2_bound(n, k));
  rep.entries.emplace("singular", singular_bound(n, k));
  rep.entries.emplace("full_support", full_support_bound(n, k));
  rep.entries.emplace("khovanskii_betti", khovanskii_betti_bound(n, k));
  rep.entries.emplace("lrw_component", lrw_component_bound(n, k));
  rep.entries.emplace("perrucci", perrucci_bound(n, k));
  if (k >= 1 && n >= k) {
    rep.entries.emplace("lower", BoundValue::exact(Rational(lower_bound(n, k))));
  }
  if (k == 1) {
    rep.entries.emplace("bihan_exact_k1", BoundValue::exact(Rational(bihan_exact_k1(n))));
  }

  const BoundValue& bs = rep.entries.at("bs_solution");
  const BoundValue& t2 = rep.entries.at("theorem2");
  if (auto it = rep.entries.find("lower"); it != rep.entries.end()) {
    rep.ordering.lower_le_bs = compare(it->second, bs) != Order::kGreater;
  }
  rep.ordering.lemma3_lt_theorem2 = compare(rep.entries.at("lemma3_sum"), t2) == Order::kLess;
  if (k >= 1) {
    rep.ordering.full_support_lt_theorem2 =
        compare(rep.entries.at("full_support"), t2) == Order::kLess;
  }
  BoundValue doubled_kappa = rep.entries.at("kappa_upper");
  doubled_kappa.exact_part *= 2;
  rep.ordering.kappa_doubles_to_bs = compare(doubled_kappa, bs) == Order::kEqual;
  BoundValue doubled_t2 = t2;
  doubled_t2.exact_part *= 2;
  rep.ordering.singular_doubles_theorem2 =
      compare(doubled_t2, rep.entries.at("singular")) == Order::kEqual;
  rep.ordering.perrucci_lt_lrw =
      compare(rep.entries.at("perrucci"), rep.entries.at("lrw_component")) == Order::kLess;
  return rep;
}

}  // namespace fewnomial
