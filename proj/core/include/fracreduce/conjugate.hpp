#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fracreduce/genpoly.hpp"
#include "fracreduce/rootfind.hpp"

namespace fracreduce {

// Output of a conjugate construction: p * p_hat = reduced(X) with all-integer
// exponents. integrality_defect is the largest coefficient magnitude seen on
// fractional exponents of the product before cleanup (0 in exact mode); it is
// the observable error signal of the floating root finder.
template <class S>
struct ConjugateResultT {
  GenPolyT<S> p_hat;
  IntPolyT<S> reduced;
  std::int64_t q = 1;
  double integrality_defect = 0.0;
};

using ConjugateResult = ConjugateResultT<Complex>;
using ConjugateResultX = ConjugateResultT<RatComplex>;

// Naive construction: with P(Y) = p(Y^q) = c1 (Y - r_1)...(Y - r_n), the
// conjugate is the full rotation product prod_{j=1}^{q-1} xi^{jn} P(xi^{-j} Y)
// = c1^{q-1} prod_i prod_{j>=1} (Y - r_i xi^j), so the reduced polynomial is
// c1^q prod_i (X - r_i^q). Root-free: only coefficient rotations are used.
ConjugateResult conjugate_naive(const GenPoly& p);

// Minimal construction: roots are grouped into xi-orbits; an orbit with
// member multiplicities k_j contributes (Y - y0 xi^j)^{m - k_j} with
// m = max_j k_j, so the reduced polynomial is c1 prod_orbits (X - y0^q)^m
// (monic p_hat). Zero roots of total multiplicity k contribute Y^{q ceil(k/q) - k}.
ConjugateResult conjugate_minimal(const GenPoly& p, double cluster_tol = 1e-7);

// Exact-mode counterparts. Naive succeeds for q in {1, 2, 4} on any input
// (the needed root of unity is Gaussian-rational) and for other q when all
// roots are rational; minimal needs rational roots (q > 1). nullopt signals
// the caller to downgrade the whole computation to floating mode.
std::optional<ConjugateResultX> conjugate_naive_exact(const GenPolyX& p);
std::optional<ConjugateResultX> conjugate_minimal_exact(const GenPolyX& p);

// Fully expanded term list of p_hat (coefficient, order), ready to become a
// FracOperator.
template <class S>
std::vector<GenTerm<S>> expand_to_operator_coeffs(const ConjugateResultT<S>& r) {
  return r.p_hat.terms;
}

}  // namespace fracreduce
