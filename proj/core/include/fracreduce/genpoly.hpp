#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fracreduce/scalars.hpp"

namespace fracreduce {

// Generalized polynomial p(X) = sum_i c_i X^{e_i} with complex coefficients
// and nonnegative rational exponents, the symbol algebra behind linear
// combinations of fractional integration operators. Terms are kept with
// strictly descending exponents and nonzero coefficients.
template <class S>
struct GenTerm {
  S coeff{};
  Rational exponent{0};
};

template <class S>
struct GenPolyT {
  std::vector<GenTerm<S>> terms;

  bool empty() const { return terms.empty(); }
  const Rational& leading_exponent() const { return terms.front().exponent; }
  const S& leading_coeff() const { return terms.front().coeff; }
  const S& constant_term_or(const S& fallback) const {
    if (!terms.empty() && terms.back().exponent.is_zero()) return terms.back().coeff;
    return fallback;
  }
};

using GenPoly = GenPolyT<Complex>;
using GenPolyX = GenPolyT<RatComplex>;

// Ordinary (integer-exponent) polynomial, dense. coeffs()[i] multiplies X^i;
// the canonical external ordering is degree-descending, see coeffs_descending.
template <class S>
struct IntPolyT {
  std::vector<S> c;  // ascending by exponent; empty means the zero polynomial

  static IntPolyT zero() { return {}; }
  static IntPolyT constant(S v) {
    IntPolyT p;
    p.c.push_back(std::move(v));
    p.trim();
    return p;
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const S& leading() const { return c.back(); }

  void trim(double scale = 0.0) {
    while (!c.empty() && ScalarTraits<S>::negligible(c.back(), scale)) c.pop_back();
  }

  std::vector<S> coeffs_descending() const { return {c.rbegin(), c.rend()}; }
  static IntPolyT from_descending(std::vector<S> d) {
    IntPolyT p;
    p.c.assign(d.rbegin(), d.rend());
    p.trim();
    return p;
  }

  template <class T>
  T eval(const T& x) const {
    T acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }
};

using IntPoly = IntPolyT<Complex>;
using IntPolyX = IntPolyT<RatComplex>;

namespace detail {

// Exponent caps keep the dense representation after substitute_down bounded.
inline void check_exponent_limits(const Rational& e) {
  if (e.den > 1000000 || e.num > 1000000000 || e.num < -1000000000)
    throw ExponentLimitError("exponent " + to_string(e) + " exceeds the supported range");
}

}  // namespace detail

// Normalizes a term list into a valid GenPoly: merges equal exponents, drops
// coefficients that are (exactly or relatively) zero, orders descending.
// Floating mode drops |c| <= 1e-12 * max input magnitude.
template <class S>
GenPolyT<S> make_genpoly(std::vector<GenTerm<S>> raw) {
  double scale = 0.0;
  for (const auto& t : raw) scale = std::max(scale, ScalarTraits<S>::magnitude(t.coeff));
  std::map<Rational, S> acc;
  for (auto& t : raw) {
    if (t.exponent < Rational(0))
      throw NegativeExponentError("negative exponent " + to_string(t.exponent));
    detail::check_exponent_limits(t.exponent);
    auto [it, fresh] = acc.try_emplace(t.exponent, t.coeff);
    if (!fresh) it->second = it->second + t.coeff;
  }
  GenPolyT<S> p;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!ScalarTraits<S>::negligible(it->second, scale))
      p.terms.push_back({it->second, it->first});
  return p;  // empty = zero polynomial (full cancellation is legal)
}

template <class S>
std::int64_t common_denominator(const GenPolyT<S>& p) {
  if (p.empty()) throw ZeroPolynomialError("common denominator of the zero polynomial");
  std::int64_t q = 1;
  for (const auto& t : p.terms) q = lcm_i64(q, t.exponent.den);
  return q;
}

template <class S>
bool is_ordinary(const GenPolyT<S>& p) {
  return p.empty() || common_denominator(p) == 1;
}

template <class S>
GenPolyT<S> add(const GenPolyT<S>& a, const GenPolyT<S>& b) {
  std::vector<GenTerm<S>> raw(a.terms);
  raw.insert(raw.end(), b.terms.begin(), b.terms.end());
  return make_genpoly(std::move(raw));
}

template <class S>
GenPolyT<S> scale(const GenPolyT<S>& a, const S& k) {
  std::vector<GenTerm<S>> raw(a.terms);
  for (auto& t : raw) t.coeff = t.coeff * k;
  return make_genpoly(std::move(raw));
}

template <class S>
GenPolyT<S> mul(const GenPolyT<S>& a, const GenPolyT<S>& b) {
  std::vector<GenTerm<S>> raw;
  raw.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms)
      raw.push_back({ta.coeff * tb.coeff, ta.exponent + tb.exponent});
  return make_genpoly(std::move(raw));
}

// p(X) -> P(Y) with X = Y^q; q must be a positive multiple of the common
// denominator so that every exponent lands on an integer power of Y.
template <class S>
IntPolyT<S> substitute_down(const GenPolyT<S>& p, std::int64_t q) {
  if (p.empty()) return IntPolyT<S>::zero();
  if (q < 1 || q % common_denominator(p) != 0)
    throw IncompatibleDenominatorError("substitution denominator " + std::to_string(q) +
                                       " is not a multiple of " + std::to_string(common_denominator(p)));
  IntPolyT<S> out;
  const Rational lead = p.leading_exponent() * Rational(q);
  out.c.assign(static_cast<std::size_t>(lead.num) + 1, S{});
  for (const auto& t : p.terms) {
    const Rational e = t.exponent * Rational(q);
    out.c[static_cast<std::size_t>(e.num)] = t.coeff;
  }
  return out;
}

template <class S>
GenPolyT<S> substitute_up(const IntPolyT<S>& p, std::int64_t q) {
  std::vector<GenTerm<S>> raw;
  for (std::size_t i = 0; i < p.c.size(); ++i)
    raw.push_back({p.c[i], Rational(static_cast<std::int64_t>(i), q)});
  return make_genpoly(std::move(raw));
}

// Floating-point evaluation at x >= 0 (fractional powers need a branch choice;
// the operators all live on nonnegative arguments).
template <class S>
Complex eval_genpoly(const GenPolyT<S>& p, double x) {
  Complex acc{};
  for (const auto& t : p.terms)
    acc += ScalarTraits<S>::to_complex(t.coeff) * std::pow(x, t.exponent.to_double());
  return acc;
}

// --- dense integer-exponent polynomial arithmetic ---

template <class S>
double poly_scale(const IntPolyT<S>& a, const IntPolyT<S>& b) {
  double ma = 0.0, mb = 0.0;
  for (const auto& v : a.c) ma = std::max(ma, ScalarTraits<S>::magnitude(v));
  for (const auto& v : b.c) mb = std::max(mb, ScalarTraits<S>::magnitude(v));
  return ma * mb;
}

template <class S>
IntPolyT<S> add(const IntPolyT<S>& a, const IntPolyT<S>& b) {
  IntPolyT<S> out;
  out.c.resize(std::max(a.c.size(), b.c.size()), S{});
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = out.c[i] + a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = out.c[i] + b.c[i];
  out.trim(poly_scale(a, b));
  return out;
}

template <class S>
IntPolyT<S> mul(const IntPolyT<S>& a, const IntPolyT<S>& b) {
  if (a.is_zero() || b.is_zero()) return IntPolyT<S>::zero();
  IntPolyT<S> out;
  out.c.assign(a.c.size() + b.c.size() - 1, S{});
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = out.c[i + j] + a.c[i] * b.c[j];
  out.trim(poly_scale(a, b));
  return out;
}

template <class S>
IntPolyT<S> scale(const IntPolyT<S>& a, const S& k) {
  IntPolyT<S> out = a;
  for (auto& v : out.c) v = v * k;
  out.trim();
  return out;
}

template <class S>
IntPolyT<S> derivative(const IntPolyT<S>& a) {
  IntPolyT<S> out;
  for (std::size_t i = 1; i < a.c.size(); ++i)
    out.c.push_back(a.c[i] * ScalarTraits<S>::from_int(static_cast<std::int64_t>(i)));
  out.trim();
  return out;
}

// Euclidean division a = q*b + r with deg r < deg b.
template <class S>
std::pair<IntPolyT<S>, IntPolyT<S>> divide(const IntPolyT<S>& a, const IntPolyT<S>& b) {
  if (b.is_zero()) throw ZeroPolynomialError("polynomial division by zero");
  IntPolyT<S> r = a, q;
  if (a.degree() >= b.degree()) q.c.assign(a.c.size() - b.c.size() + 1, S{});
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const S f = r.leading() / b.leading();
    q.c[shift] = f;
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] = r.c[shift + i] - f * b.c[i];
    r.c.pop_back();  // leading term cancels by construction
    r.trim(poly_scale(a, b));
  }
  q.trim();
  return {q, r};
}

}  // namespace fracreduce
