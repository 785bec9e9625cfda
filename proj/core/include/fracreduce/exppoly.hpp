#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "fracreduce/genpoly.hpp"
#include "fracreduce/gridfn.hpp"

namespace fracreduce {

// Exponential polynomials: finite sums p_1(t) e^{l_1 t} + ... with pairwise
// distinct exponents and nonzero polynomial parts. Closed under +, *, d/dt,
// which is exactly what the closed-form ODE route needs.
template <class S>
struct ExpTerm {
  S lambda{};
  IntPolyT<S> poly;  // polynomial factor in t, ascending coefficients
};

template <class S>
struct ExpPolyT {
  std::vector<ExpTerm<S>> terms;  // canonical: lambdas lexicographically ascending

  bool is_zero() const { return terms.empty(); }
};

using ExpPoly = ExpPolyT<Complex>;
using ExpPolyX = ExpPolyT<RatComplex>;

inline bool lambda_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}
inline bool lambda_less(const RatComplex& a, const RatComplex& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}
inline bool lambda_eq(const Complex& a, const Complex& b) { return a == b; }
inline bool lambda_eq(const RatComplex& a, const RatComplex& b) { return a == b; }

// Merges equal exponents (bitwise in floating mode: callers that produce
// near-duplicate exponents must snap them first), trims polynomial parts,
// drops empty terms, sorts canonically.
template <class S>
ExpPolyT<S> make_exppoly(std::vector<ExpTerm<S>> raw) {
  std::vector<ExpTerm<S>> acc;
  for (auto& t : raw) {
    t.poly.trim();
    if (t.poly.is_zero()) continue;
    bool merged = false;
    for (auto& u : acc)
      if (lambda_eq(u.lambda, t.lambda)) {
        u.poly = add(u.poly, t.poly);
        merged = true;
        break;
      }
    if (!merged) acc.push_back(std::move(t));
  }
  std::erase_if(acc, [](const ExpTerm<S>& t) { return t.poly.is_zero(); });
  std::sort(acc.begin(), acc.end(),
            [](const ExpTerm<S>& x, const ExpTerm<S>& y) { return lambda_less(x.lambda, y.lambda); });
  return {std::move(acc)};
}

template <class S>
ExpPolyT<S> add(const ExpPolyT<S>& a, const ExpPolyT<S>& b) {
  std::vector<ExpTerm<S>> raw(a.terms);
  raw.insert(raw.end(), b.terms.begin(), b.terms.end());
  return make_exppoly(std::move(raw));
}

template <class S>
ExpPolyT<S> scale(const ExpPolyT<S>& a, const S& k) {
  std::vector<ExpTerm<S>> raw(a.terms);
  for (auto& t : raw) t.poly = scale(t.poly, k);
  return make_exppoly(std::move(raw));
}

template <class S>
ExpPolyT<S> mul(const ExpPolyT<S>& a, const ExpPolyT<S>& b) {
  std::vector<ExpTerm<S>> raw;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) raw.push_back({ta.lambda + tb.lambda, mul(ta.poly, tb.poly)});
  return make_exppoly(std::move(raw));
}

// d/dt (p e^{lt}) = (p' + l p) e^{lt}
template <class S>
ExpPolyT<S> derivative(const ExpPolyT<S>& a) {
  std::vector<ExpTerm<S>> raw;
  for (const auto& t : a.terms) raw.push_back({t.lambda, add(derivative(t.poly), scale(t.poly, t.lambda))});
  return make_exppoly(std::move(raw));
}

template <class S>
ExpPolyT<S> nth_derivative(ExpPolyT<S> a, int n) {
  for (int i = 0; i < n; ++i) a = derivative(a);
  return a;
}

template <class S>
Complex eval(const ExpPolyT<S>& a, double t) {
  Complex out{};
  for (const auto& term : a.terms) {
    Complex p{};
    for (auto it = term.poly.c.rbegin(); it != term.poly.c.rend(); ++it)
      p = p * t + ScalarTraits<S>::to_complex(*it);
    out += p * std::exp(ScalarTraits<S>::to_complex(term.lambda) * t);
  }
  return out;
}

// Exact value at t = 0: e^{l*0} = 1 for every exponent, so only the constant
// polynomial coefficients survive. (The exact pipeline requires base 0 for
// precisely this reason.)
template <class S>
S eval_at_zero(const ExpPolyT<S>& a) {
  S out{};
  for (const auto& term : a.terms)
    if (!term.poly.is_zero()) out = out + term.poly.c.front();
  return out;
}

// f(0), f'(0), ..., f^{(count-1)}(0).
template <class S>
std::vector<S> derivatives_at_zero(const ExpPolyT<S>& a, int count) {
  std::vector<S> out;
  ExpPolyT<S> cur = a;
  for (int k = 0; k < count; ++k) {
    out.push_back(eval_at_zero(cur));
    if (k + 1 < count) cur = derivative(cur);
  }
  return out;
}

inline ExpPoly to_floating(const ExpPolyX& a) {
  std::vector<ExpTerm<Complex>> raw;
  for (const auto& t : a.terms) {
    ExpTerm<Complex> ft{t.lambda.to_complex(), {}};
    for (const auto& c : t.poly.c) ft.poly.c.push_back(c.to_complex());
    raw.push_back(std::move(ft));
  }
  return make_exppoly(std::move(raw));
}

template <class S>
GridFunction sample(const ExpPolyT<S>& a, double lo, double hi, int n) {
  return sample_grid(lo, hi, n, [&](double t) { return eval(a, t); });
}

}  // namespace fracreduce
