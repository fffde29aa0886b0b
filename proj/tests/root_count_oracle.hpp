#pragma once

// Positive-root counter that shares no code with the library's Sturm
// machinery: Descartes' rule of signs driven by interval bisection
// (Vincent-Collins-Akritas). Everything here works on plain ascending
// coefficient vectors with its own exact helpers, so an agreement test
// between the two counters is a genuine cross-check, not a tautology.

#include <cstddef>
#include <vector>

#include "fewnomial/numeric.hpp"

namespace fewnomial::testing {

namespace oracle_detail {

using Poly = std::vector<Rational>;  // ascending, trailing zeros trimmed

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Rational eval(const Poly& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

inline Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
  return out;
}

// Remainder of a by b over the rationals.
inline Poly mod(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

inline Poly gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

inline Poly divide_exact(const Poly& a, const Poly& b) {
  Poly rem = a;
  Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    const Rational factor = rem.back() / b.back();
    const std::size_t shift = rem.size() - b.size();
    quot[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
    trim(rem);
  }
  return quot;
}

inline int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline std::size_t variations(const Poly& p) {
  std::size_t count = 0;
  int last = 0;
  for (const auto& c : p) {
    const int s = sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// In-place Taylor shift p(x) -> p(x + 1).
inline void shift_by_one(Poly& p) {
  if (p.size() < 2) return;
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    for (std::size_t i = p.size() - 1; i-- > j;) p[i] += p[i + 1];
  }
}

// Sign variations of (x+1)^d p(1/(x+1)), whose positive roots are exactly
// the roots of p inside the open interval (0, 1). A root of p at 1 lands at
// x = 0 and must be ignored, hence the constant-term strip.
inline std::size_t variations_01(const Poly& p) {
  Poly rev(p.rbegin(), p.rend());
  trim(rev);
  shift_by_one(rev);
  std::size_t skip = 0;
  while (skip < rev.size() && rev[skip] == 0) ++skip;
  Poly stripped(rev.begin() + static_cast<std::ptrdiff_t>(skip), rev.end());
  return variations(stripped);
}

// Distinct roots of a squarefree p in the open interval (0, 1), by Descartes
// bisection: zero variations exclude the interval, one pins a single root,
// anything else splits at the midpoint.
inline std::size_t count_01(const Poly& p) {
  const std::size_t v = variations_01(p);
  if (v <= 1) return v;
  // Left half p(x/2) and right half p((x+1)/2), both rescaled back to (0, 1).
  Poly half = p;
  Rational scale(1);
  const Rational one_half(1, 2);
  for (std::size_t i = 1; i < half.size(); ++i) {
    scale *= one_half;
    half[i] *= scale;
  }
  Poly right = half;
  shift_by_one(right);
  trim(right);
  const std::size_t midpoint_root = eval(p, one_half) == 0 ? 1 : 0;
  return count_01(half) + midpoint_root + count_01(right);
}

}  // namespace oracle_detail

// Number of distinct roots in (0, inf) of the polynomial with the given
// ascending coefficients. Returns 0 for constants; the zero polynomial is the
// caller's problem.
inline std::size_t oracle_positive_count(std::vector<Rational> coefficients) {
  using namespace oracle_detail;
  Poly p = std::move(coefficients);
  trim(p);
  if (p.empty()) return 0;
  // Roots at the origin are not positive.
  std::size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  if (p.size() <= 1) return 0;
  const Poly g = gcd(p, derivative(p));
  if (g.size() > 1) p = divide_exact(p, g);
  // Cauchy bound: every root has |x| < 1 + max|c_i| / |lead|.
  Rational max_ratio(0);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const Rational r = abs(p[i] / p.back());
    if (r > max_ratio) max_ratio = r;
  }
  const Rational bound = 1 + max_ratio;
  // Map (0, bound) onto (0, 1) via x -> bound * x.
  Poly scaled = p;
  Rational power(1);
  for (std::size_t i = 1; i < scaled.size(); ++i) {
    power *= bound;
    scaled[i] *= power;
  }
  return count_01(scaled);
}

}  // namespace fewnomial::testing
