#pragma once

#include <cstdint>
#include <vector>

#include "fracreduce/gridfn.hpp"
#include "fracreduce/rational.hpp"

namespace fracreduce {

// One term c * I_a^order of a fractional-integral combination; order 0 is the
// identity.
struct FracTerm {
  Complex coeff;
  Rational order{0};
};

// T = sum_i c_i I_a^{r_i} with orders strictly decreasing. An empty term list
// is the zero operator.
struct FracOperator {
  double base = 0.0;
  std::vector<FracTerm> terms;
};

// Normalizes: merges equal orders, drops vanished coefficients, sorts
// descending. Throws NegativeOrderError for orders < 0.
FracOperator make_operator(double base, std::vector<FracTerm> terms);

// lcm of the order denominators (1 for the zero operator).
std::int64_t operator_denominator(const FracOperator& T);

// Startup corrections for the product-trapezoid rule. The plain rule is
// second order on smooth integrands but only O(h^{1+min sigma}) near the base
// point when the integrand carries t^{sigma} terms with fractional sigma; the
// corrected rule adds per-node weights on the first few nodes chosen so the
// quadrature is exact on {1, t} plus the listed fractional powers. An empty
// list means the plain rule.
struct QuadratureOptions {
  std::vector<Rational> startup;
};

// The fractional powers j/q (j = 1..2q, j/q not an integer) — the exponent
// set produced when solutions carry denominator-q algebraic structure.
std::vector<Rational> startup_basis_for_denominator(std::int64_t q);

// (I_a^alpha f)(t_k) for k = 0..n by product integration of the piecewise
// linear interpolant against (x - t)^{alpha-1}/Gamma(alpha); exact for f in
// span{1, t}. Value at t_0 is 0. alpha must be > 0.
GridFunction frac_integral(const GridFunction& f, const Rational& alpha,
                           const QuadratureOptions& opt = {});

// Riemann-Liouville derivative D_a^alpha = d/dx (I_a^{1-alpha} .), alpha in
// (0,1), by Grunwald-Letnikov differences; OrderOutOfRangeError otherwise.
// First-order accurate for smooth f with f(a) = 0.
GridFunction gl_frac_derivative(const GridFunction& f, const Rational& alpha);

// sum_i c_i * I^{r_i} f (identity terms added directly). The convenience
// overload derives startup corrections from the operator's own denominator,
// which matches the structure of solutions produced by the reduction.
GridFunction apply_operator(const FracOperator& T, const GridFunction& f,
                            const QuadratureOptions& opt);
GridFunction apply_operator(const FracOperator& T, const GridFunction& f);

namespace detail {

// Product-trapezoid weights in convolution form:
//   (I^alpha f)(t_k) = factor * ( a0[k] f_0 + sum_{s=1..k-1} phi[s] f_{k-s} + f_k ),
// factor = h^alpha / Gamma(alpha+2). Exposed so the Volterra stepper can run
// its triangular elimination on exactly the weights the quadrature uses.
struct TrapTables {
  double factor = 0.0;
  std::vector<double> phi;  // phi[s] for s = 1..n (index 0 unused)
  std::vector<double> a0;   // a0[k] for k = 1..n (index 0 unused)
};

TrapTables build_trap_tables(double alpha, double h, int n);

}  // namespace detail

}  // namespace fracreduce
