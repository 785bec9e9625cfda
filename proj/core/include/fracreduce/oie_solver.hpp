#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "fracreduce/exppoly.hpp"
#include "fracreduce/fracops.hpp"
#include "fracreduce/gridfn.hpp"

namespace fracreduce {

// c_0 I^n x + c_1 I^{n-1} x + ... + c_{n-1} I^1 x + c_n x = rhs, base point a.
struct IntOrderEquation {
  std::vector<Complex> coeffs;  // c_0..c_n, c_0 != 0
  double base = 0.0;
  std::variant<ExpPoly, GridFunction> rhs;
};

// Forward substitution through the triangular product-trapezoid system; the
// discrete equation holds exactly at every node. Requires a second-kind
// equation (identity coefficient c_n significantly nonzero):
// FirstKindUnsupportedError otherwise, SingularStepError when the diagonal
// solve coefficient vanishes.
GridFunction solve_volterra(const std::vector<Complex>& coeffs, const GridFunction& rhs);
GridFunction solve_volterra(const IntOrderEquation& eq);

// Differentiating n times turns the integral equation into
// c_0 x + c_1 x' + ... + c_n x^{(n)} = D^n rhs; returns the coefficient list
// (unchanged, reinterpreted) and the differentiated forcing.
std::pair<std::vector<Complex>, ExpPoly> reduce_to_ode(const std::vector<Complex>& coeffs,
                                                       const ExpPoly& rhs);

// x(a), x'(a), ..., x^{(n-1)}(a) from the triangular system obtained by
// differentiating the integral equation k times and evaluating at t = a:
//   c_n x^{(k)}(a) + sum_{j=1..k} c_{n-j} x^{(k-j)}(a) = rhs^{(k)}(a).
// DegenerateLeadingError if c_n = 0.
std::vector<Complex> initial_conditions(const std::vector<Complex>& coeffs, const ExpPoly& rhs,
                                        double a);

// Closed-form ODE solution: characteristic roots (clustered), homogeneous
// basis t^s e^{mt}, particular solution by undetermined coefficients with the
// standard resonance shift, constants from the initial conditions. The result
// is verified by symbolic differentiation (plug-back) before being returned.
// IllConditionedError if the constants' system has condition estimate > 1e12.
ExpPoly solve_ode_closed(const std::vector<Complex>& ode_coeffs, const ExpPoly& rhs,
                         const std::vector<Complex>& init, double a, double cluster_tol = 1e-7);

// Exact-rational route (base must be 0 so that e^{l a} = 1 exactly). nullopt
// when a characteristic root is not rational; the pipeline then falls back to
// the floating route.
std::vector<RatComplex> initial_conditions_exact(const std::vector<RatComplex>& coeffs,
                                                 const ExpPolyX& rhs);
std::optional<ExpPolyX> solve_ode_closed_exact(const std::vector<RatComplex>& ode_coeffs,
                                               const ExpPolyX& rhs,
                                               const std::vector<RatComplex>& init);

}  // namespace fracreduce
