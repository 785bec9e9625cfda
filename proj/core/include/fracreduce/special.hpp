#pragma once

#include "fracreduce/rational.hpp"
#include "fracreduce/scalars.hpp"

namespace fracreduce {

// Gamma function; relative error <= 1e-12 on (0, 170]. Throws PoleError at
// nonpositive integers, uses reflection for the rest of the negative axis.
double gamma_fn(double x);

// Two-parameter Mittag-Leffler E_{alpha,beta}(z) by direct series, truncated
// once the term magnitude stays below 1e-16 * |partial sum| for 3 consecutive
// terms. The series is used well inside its numerically safe region only:
// |z| <= 50 for alpha >= 1/4, |z| <= 5 below (DomainError beyond).
Complex mittag_leffler(double alpha, double beta, Complex z);

// I_0^alpha applied to e^{lambda s}, evaluated at t >= 0:
//   t^alpha * E_{1, 1+alpha}(lambda t).
Complex frac_integral_exp_closed(const Rational& alpha, Complex lambda, double t);

// I_0^rho applied to s^j e^{lambda s}, evaluated at t >= 0:
//   t^{rho+j} * sum_k (lambda t)^k (k+j)! / (k! Gamma(k+j+1+rho)),
// the term the closed-form route uses to push T-hat through an ExpPoly.
Complex frac_integral_polyexp_closed(const Rational& rho, int j, Complex lambda, double t);

}  // namespace fracreduce
