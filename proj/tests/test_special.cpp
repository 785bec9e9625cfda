#include <cmath>

#include "doctest.h"
#include "fracreduce/special.hpp"
#include "quad_oracle.hpp"

using namespace fracreduce;

TEST_CASE("gamma_fn reference values") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-13));
  CHECK(gamma_fn(2.5) == doctest::Approx(1.3293403881791370).epsilon(1e-13));
  // reflection branch
  CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(std::acos(-1.0))).epsilon(1e-12));
  CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
  CHECK_THROWS_AS(gamma_fn(-3.0), PoleError);
}

TEST_CASE("mittag_leffler reduces to elementary functions") {
  // E_{1,1}(z) = e^z, E_{1,2}(z) = (e^z - 1)/z, E_{2,1}(z^2) = cosh z
  CHECK(mittag_leffler(1.0, 1.0, {1.0, 0.0}).real() == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(mittag_leffler(1.0, 2.0, {1.0, 0.0}).real() ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-15));
  CHECK(mittag_leffler(2.0, 1.0, {4.0, 0.0}).real() == doctest::Approx(std::cosh(2.0)).epsilon(1e-14));
  CHECK(mittag_leffler(1.0, 1.0, {0.0, 1.0}).real() == doctest::Approx(std::cos(1.0)).epsilon(1e-14));
  CHECK(mittag_leffler(1.0, 1.0, {0.0, 1.0}).imag() == doctest::Approx(std::sin(1.0)).epsilon(1e-14));
}

TEST_CASE("mittag_leffler frozen values") {
  CHECK(mittag_leffler(1.0, 1.5, {1.0, 0.0}).real() ==
        doctest::Approx(2.29069825230323823).epsilon(1e-15));
  CHECK(mittag_leffler(1.0, 1.5, {0.0625, 0.0}).real() ==
        doctest::Approx(1.17659164474745074).epsilon(1e-15));
}

TEST_CASE("mittag_leffler domain guard") {
  CHECK_THROWS_AS(mittag_leffler(0.5, 1.0, {60.0, 0.0}), DomainError);
  CHECK_THROWS_AS(mittag_leffler(0.2, 1.0, {6.0, 0.0}), DomainError);
  CHECK_NOTHROW(mittag_leffler(0.2, 1.0, {2.0, 0.0}));
  CHECK_THROWS_AS(mittag_leffler(0.0, 1.0, {0.5, 0.0}), DomainError);
}

TEST_CASE("frac_integral_exp_closed frozen values") {
  // lambda = 0: I^{1/2} 1 = t^{1/2} / Gamma(3/2); at t = 4 this is 2.2567...
  CHECK(frac_integral_exp_closed({1, 2}, {0.0, 0.0}, 4.0).real() ==
        doctest::Approx(2.2567583341910251).epsilon(1e-15));
  // lambda = 1, alpha = 1: I e^t = e^t - 1
  CHECK(frac_integral_exp_closed({1}, {1.0, 0.0}, 2.0).real() ==
        doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("closed fractional integrals match adaptive quadrature") {
  // the quadrature oracle shares nothing with the series implementation
  for (const double t : {0.5, 1.0, 3.0}) {
    const double viaseries = frac_integral_exp_closed({1, 2}, {1.0, 0.0}, t).real();
    const double viaquad =
        testsupport::frac_integral_oracle([](double s) { return std::exp(s); }, 0.5, 0.0, t);
    CHECK(viaseries == doctest::Approx(viaquad).epsilon(1e-10));
  }
  const double a34 = frac_integral_exp_closed({3, 4}, {-2.0, 0.0}, 1.5).real();
  const double q34 =
      testsupport::frac_integral_oracle([](double s) { return std::exp(-2.0 * s); }, 0.75, 0.0, 1.5);
  CHECK(a34 == doctest::Approx(q34).epsilon(1e-10));
}

TEST_CASE("frac_integral_polyexp_closed") {
  // j = 0 must agree with the plain exponential form
  CHECK(frac_integral_polyexp_closed({1, 2}, 0, {1.0, 0.0}, 2.0).real() ==
        doctest::Approx(frac_integral_exp_closed({1, 2}, {1.0, 0.0}, 2.0).real()).epsilon(1e-15));
  // I^{1/2}(s e^s) vs quadrature
  const double got = frac_integral_polyexp_closed({1, 2}, 1, {1.0, 0.0}, 1.0).real();
  const double want =
      testsupport::frac_integral_oracle([](double s) { return s * std::exp(s); }, 0.5, 0.0, 1.0);
  CHECK(got == doctest::Approx(want).epsilon(1e-10));
  // lambda = 0, j = 2: I^{1/2} s^2 = Gamma(3)/Gamma(7/2) t^{5/2}
  const double g = frac_integral_polyexp_closed({1, 2}, 2, {0.0, 0.0}, 2.0).real();
  const double w = 2.0 / gamma_fn(3.5) * std::pow(2.0, 2.5);
  CHECK(g == doctest::Approx(w).epsilon(1e-13));
}
