#include <cmath>

#include "doctest.h"
#include "fracreduce/pipeline.hpp"
#include "fracreduce/special.hpp"

using namespace fracreduce;

namespace {

GenPolyX gp(std::vector<std::pair<RatComplex, Rational>> terms) {
  std::vector<GenTerm<RatComplex>> raw;
  for (auto& [c, e] : terms) raw.push_back({c, e});
  return make_genpoly(std::move(raw));
}

ExpPolyX exp_t() {
  ExpTerm<RatComplex> t{RatComplex(1), {}};
  t.poly.c = {RatComplex(1)};
  return make_exppoly<RatComplex>({t});
}

Equation golden_equation() {
  Equation eq;
  eq.symbol_exact = gp({{RatComplex(1), {1}},
                        {RatComplex(5), {3, 4}},
                        {RatComplex(2), {1, 2}},
                        {RatComplex(-20), {1, 4}},
                        {RatComplex(-24), {0}}});
  eq.T = operator_from_exact(*eq.symbol_exact, 0.0);
  eq.rhs = exp_t();
  eq.a = 0.0;
  eq.b = 1.0;
  return eq;
}

}  // namespace

TEST_CASE("operator <-> symbol round trips") {
  auto T = make_operator(0.25, {{{2, 0}, {3, 2}}, {{-1, 0}, {0}}});
  auto p = operator_to_genpoly(T);
  REQUIRE(p.terms.size() == 2);
  CHECK(p.terms[0].exponent == Rational(3, 2));
  auto back = genpoly_to_operator(p, 0.25);
  CHECK(back.base == T.base);
  REQUIRE(back.terms.size() == 2);
  CHECK(back.terms[0].order == T.terms[0].order);
  CHECK(back.terms[0].coeff == T.terms[0].coeff);

  // zero operator <-> zero polynomial
  CHECK(operator_to_genpoly(FracOperator{}).empty());
  CHECK(genpoly_to_operator(GenPoly{}, 0.0).terms.empty());
}

TEST_CASE("golden reduction through the pipeline") {
  auto eq = golden_equation();
  auto red = reduce(eq, true);
  CHECK(red.exact);
  CHECK(red.q == 4);
  CHECK(red.integrality_defect == 0.0);
  REQUIRE(red.reduced_exact.has_value());
  const std::vector<std::int64_t> want{1, -113, 2848, -20736};
  REQUIRE(red.reduced_exact->size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK((*red.reduced_exact)[i] == RatComplex(want[i]));
  REQUIRE(red.reduced_coeffs.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(red.reduced_coeffs[i] == Complex{static_cast<double>(want[i]), 0.0});

  // t_hat: nine terms, orders 2 down to 0 in quarter steps
  REQUIRE(red.t_hat.terms.size() == 9);
  const std::vector<std::int64_t> hat{1, -5, 23, -85, 190, -440, 672, -720, 864};
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(red.t_hat.terms[i].order == Rational(8 - static_cast<std::int64_t>(i), 4));
    CHECK(red.t_hat.terms[i].coeff == Complex{static_cast<double>(hat[i]), 0.0});
  }

  // naive construction reduces too, one degree higher
  auto naive = reduce(eq, false);
  CHECK(naive.exact);
  CHECK(naive.reduced_coeffs.size() == 5);
}

TEST_CASE("reduction without an identity term keeps the plain conjugate") {
  Equation eq;
  eq.symbol_exact = gp({{RatComplex(1), {1, 2}}});
  eq.T = operator_from_exact(*eq.symbol_exact, 0.0);
  eq.rhs = ExpPolyX{};
  auto red = reduce(eq);
  CHECK(red.q == 2);
  REQUIRE(red.t_hat.terms.size() == 1);
  CHECK(red.t_hat.terms[0].order == Rational(1, 2));
  REQUIRE(red.reduced_coeffs.size() == 2);
  CHECK(red.reduced_coeffs[0] == Complex{1, 0});
  CHECK(red.reduced_coeffs[1] == Complex{0, 0});
}

TEST_CASE("operator composition commutes with its conjugate on the grid") {
  auto eq = golden_equation();
  auto red = reduce(eq, true);
  const int n = 256;
  auto f = sample_grid(0.0, 1.0, n, [](double t) { return std::exp(t); });
  auto ab = apply_operator(eq.T, apply_operator(red.t_hat, f));
  auto ba = apply_operator(red.t_hat, apply_operator(eq.T, f));
  const double scale = std::max(sup_norm(ab, 1), 1.0);
  CHECK(sup_distance(ab, ba, 1) / scale < 1e-4);  // measured 1.9e-5 at n=256

  // and both match the reduced integer-order operator applied directly
  std::vector<FracTerm> rterms;
  const int deg = static_cast<int>(red.reduced_coeffs.size()) - 1;
  for (int i = 0; i <= deg; ++i)
    rterms.push_back({red.reduced_coeffs[static_cast<std::size_t>(i)], Rational(deg - i)});
  auto direct = apply_operator(make_operator(0.0, std::move(rterms)), f);
  CHECK(sup_distance(ab, direct, 1) / scale < 1e-3);  // measured 1.4e-4 at n=256
}

TEST_CASE("golden solve: both methods, certificate honored") {
  auto eq = golden_equation();
  SolveConfig cfg;
  cfg.n = 512;

  auto comp = solve_computing(eq, cfg);
  CHECK(comp.method == Method::computing);
  CHECK(comp.accepted);
  CHECK(comp.residual_sup <= comp.tol);
  CHECK(comp.closed_exact.has_value());
  CHECK(comp.grid_n == 512);

  auto chk = solve_checking(eq, cfg);
  CHECK(chk.method == Method::checking);
  CHECK(chk.accepted);
  CHECK(chk.residual_sup <= chk.tol);

  CHECK(sup_distance(comp.solution, chk.solution) < 1e-3);

  // the reported residual is reproducible from the reported solution
  CHECK(residual(eq, comp.solution) == doctest::Approx(comp.residual_sup).epsilon(1e-9));
}

TEST_CASE("homogeneous equation returns the zero function") {
  auto eq = golden_equation();
  eq.rhs = ExpPolyX{};
  auto rep = solve_computing(eq);
  CHECK(rep.accepted);
  CHECK(sup_norm(rep.solution) <= 1e-14);
  CHECK(rep.residual_sup <= 1e-14);
}

TEST_CASE("pure integration of a constant has no L1 solution") {
  // I^1 x = 1: differentiating demands x = 0, which violates the original
  Equation eq;
  eq.symbol_exact = gp({{RatComplex(1), {1}}});
  eq.T = operator_from_exact(*eq.symbol_exact, 0.0);
  ExpTerm<RatComplex> one{RatComplex(0), {}};
  one.poly.c = {RatComplex(1)};
  eq.rhs = make_exppoly<RatComplex>({one});
  CHECK_THROWS_AS(solve_computing(eq), NoSolutionError);
  CHECK_THROWS_AS(solve_checking(eq), NoSolutionError);
}

TEST_CASE("residual of the zero candidate is the forcing norm") {
  auto eq = golden_equation();
  auto zero = make_grid(0.0, 1.0, 128);
  CHECK(residual(eq, zero) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("abel problem with a sampled right-hand side") {
  // I^{1/2} x = I^{1/2}(t e^{-t}) sampled: recover g(t) = t e^{-t}
  Equation eq;
  eq.symbol_exact = gp({{RatComplex(1), {1, 2}}});
  eq.T = operator_from_exact(*eq.symbol_exact, 0.0);
  const int n = 1024;
  eq.rhs = sample_grid(0.0, 1.0, n, [](double t) {
    return frac_integral_polyexp_closed({1, 2}, 1, {-1.0, 0.0}, t);
  });
  SolveConfig cfg;
  cfg.n = n;

  auto comp = solve_computing(eq, cfg);
  CHECK(comp.accepted);
  double err = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double t = comp.solution.node(k);
    err = std::max(err, std::abs(comp.solution.values[k] - Complex{t * std::exp(-t), 0.0}));
  }
  CHECK(err <= 1e-3);

  auto chk = solve_checking(eq, cfg);
  CHECK(chk.accepted);
  CHECK(sup_distance(comp.solution, chk.solution) <= 1e-3);
}

TEST_CASE("convergence study") {
  auto eq = golden_equation();
  SolveConfig cfg;
  auto rows = convergence_study(eq, {128, 256, 512}, cfg);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].n == 128);
  CHECK_FALSE(rows[0].observed_order.has_value());
  REQUIRE(rows[1].observed_order.has_value());
  CHECK(*rows[1].observed_order > 1.5);
  CHECK(rows[2].residual_sup < rows[1].residual_sup);

  auto single = convergence_study(eq, {128}, cfg);
  REQUIRE(single.size() == 1);
  CHECK_FALSE(single[0].observed_order.has_value());
}

TEST_CASE("solves are deterministic") {
  auto eq = golden_equation();
  SolveConfig cfg;
  cfg.n = 128;
  auto r1 = solve_computing(eq, cfg);
  auto r2 = solve_computing(eq, cfg);
  CHECK(to_json(r1.solution) == to_json(r2.solution));
  CHECK(r1.residual_sup == r2.residual_sup);
}
