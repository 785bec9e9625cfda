#include "fracreduce/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fracreduce/errors.hpp"
#include "fracreduce/special.hpp"

namespace fracreduce {

GenPoly operator_to_genpoly(const FracOperator& T) {
  std::vector<GenTerm<Complex>> raw;
  for (const auto& t : T.terms) raw.push_back({t.coeff, t.order});
  return make_genpoly(std::move(raw));
}

FracOperator genpoly_to_operator(const GenPoly& p, double base) {
  std::vector<FracTerm> terms;
  for (const auto& t : p.terms) terms.push_back({t.coeff, t.exponent});
  return make_operator(base, std::move(terms));
}

GenPoly to_floating(const GenPolyX& p) {
  std::vector<GenTerm<Complex>> raw;
  for (const auto& t : p.terms) raw.push_back({t.coeff.to_complex(), t.exponent});
  return make_genpoly(std::move(raw));
}

FracOperator operator_from_exact(const GenPolyX& p, double base) {
  return genpoly_to_operator(to_floating(p), base);
}

namespace {

std::vector<Complex> to_complex_coeffs(const std::vector<RatComplex>& v) {
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c.to_complex());
  return out;
}

}  // namespace

ReduceOutcome reduce(const Equation& eq, bool minimal, double cluster_tol) {
  ReduceOutcome out;
  if (eq.symbol_exact) {
    auto cx = minimal ? conjugate_minimal_exact(*eq.symbol_exact)
                      : conjugate_naive_exact(*eq.symbol_exact);
    if (cx) {
      out.exact = true;
      out.q = cx->q;
      out.t_hat_exact = cx->p_hat;
      out.reduced_exact = cx->reduced.coeffs_descending();
      out.t_hat = operator_from_exact(cx->p_hat, eq.a);
      out.reduced_coeffs = to_complex_coeffs(*out.reduced_exact);
      return out;
    }
  }
  const GenPoly sym =
      eq.symbol_exact ? to_floating(*eq.symbol_exact) : operator_to_genpoly(eq.T);
  const ConjugateResult c =
      minimal ? conjugate_minimal(sym, cluster_tol) : conjugate_naive(sym);
  out.q = c.q;
  out.integrality_defect = c.integrality_defect;
  out.t_hat = genpoly_to_operator(c.p_hat, eq.a);
  out.reduced_coeffs = c.reduced.coeffs_descending();
  return out;
}

namespace {

// Second-order one-sided/central differences; the fallback rhs transformation
// when the forcing is only known on the grid.
GridFunction grid_derivative(const GridFunction& f) {
  if (f.n < 2) throw DomainError("grid too coarse to differentiate");
  GridFunction d = f;
  const double h = f.h();
  const int n = f.n;
  d.values[0] = (-3.0 * f.values[0] + 4.0 * f.values[1] - f.values[2]) / (2.0 * h);
  for (int k = 1; k < n; ++k)
    d.values[static_cast<std::size_t>(k)] =
        (f.values[static_cast<std::size_t>(k + 1)] - f.values[static_cast<std::size_t>(k - 1)]) /
        (2.0 * h);
  d.values[static_cast<std::size_t>(n)] =
      (3.0 * f.values[static_cast<std::size_t>(n)] -
       4.0 * f.values[static_cast<std::size_t>(n - 1)] +
       f.values[static_cast<std::size_t>(n - 2)]) /
      (2.0 * h);
  return d;
}

// y(a + u) as an exponential polynomial in u; needed because the closed
// fractional integrals are taken from 0 in the shifted variable.
ExpPoly shift_exppoly(const ExpPoly& y, double a) {
  std::vector<ExpTerm<Complex>> raw;
  for (const auto& term : y.terms) {
    const int d = term.poly.degree();
    IntPoly p;
    p.c.assign(static_cast<std::size_t>(d) + 1, Complex{});
    for (int k = 0; k <= d; ++k) {
      // c_k (a+u)^k spreads binomially over u^0..u^k
      double binom = 1.0;
      for (int j = 0; j <= k; ++j) {
        p.c[static_cast<std::size_t>(j)] +=
            term.poly.c[static_cast<std::size_t>(k)] * binom * std::pow(a, k - j);
        binom *= static_cast<double>(k - j) / (j + 1);
      }
    }
    const Complex scale_exp = std::exp(term.lambda * a);
    for (auto& c : p.c) c *= scale_exp;
    raw.push_back({term.lambda, std::move(p)});
  }
  return make_exppoly(std::move(raw));
}

// x = T-hat y with closed-form y: every (order, monomial, exponent) triple
// has a closed fractional integral, summed per node.
GridFunction closed_pullback(const FracOperator& t_hat, const ExpPoly& y, double a, double b,
                             int n) {
  const ExpPoly ys = (a == 0.0) ? y : shift_exppoly(y, a);
  GridFunction x = make_grid(a, b, n);
  for (int k = 0; k <= n; ++k) {
    const double u = (b - a) * k / n;
    Complex acc{};
    for (const auto& op : t_hat.terms)
      for (const auto& term : ys.terms)
        for (int j = 0; j <= term.poly.degree(); ++j)
          acc += op.coeff * term.poly.c[static_cast<std::size_t>(j)] *
                 frac_integral_polyexp_closed(op.order, j, term.lambda, u);
    x.values[static_cast<std::size_t>(k)] = acc;
  }
  return x;
}

GenPoly shift_exponents(const FracOperator& T, const Rational& alpha) {
  std::vector<GenTerm<Complex>> raw;
  for (const auto& t : T.terms) raw.push_back({t.coeff, t.order - alpha});
  return make_genpoly(std::move(raw));
}

GenPolyX shift_exponents(const GenPolyX& p, const Rational& alpha) {
  std::vector<GenTerm<RatComplex>> raw;
  for (const auto& t : p.terms) raw.push_back({t.coeff, t.exponent - alpha});
  return make_genpoly(std::move(raw));
}

SolveReport solve_impl(const Equation& eq, const SolveConfig& cfg, Method method) {
  if (eq.T.terms.empty()) throw ZeroPolynomialError("the zero operator has no solutions to offer");
  if (!(eq.b > eq.a)) throw DomainError("interval is empty");
  if (std::abs(eq.T.base - eq.a) > 1e-12 * std::max(1.0, std::abs(eq.a)))
    throw BaseMismatchError("operator base point differs from the interval start");

  SolveReport rep;
  rep.method = method;

  // the grid: prescribed by a sampled right-hand side, by cfg.n otherwise
  GridFunction w_grid;
  if (const auto* g = std::get_if<GridFunction>(&eq.rhs)) {
    validate(*g);
    if (std::abs(g->a - eq.a) > 1e-12 * std::max(1.0, std::abs(eq.a)) ||
        std::abs(g->b - eq.b) > 1e-12 * std::max(1.0, std::abs(eq.b)))
      throw BaseMismatchError("right-hand side grid does not cover the equation interval");
    w_grid = *g;
  } else {
    if (cfg.n < 2) throw DomainError("grid needs at least 2 subintervals");
    w_grid = sample(std::get<ExpPolyX>(eq.rhs), eq.a, eq.b, cfg.n);
  }
  const int n = w_grid.n;
  rep.grid_n = n;

  const double wnorm = sup_norm(w_grid);
  if (cfg.tol && !(*cfg.tol > 0.0))
    throw InvalidToleranceError("tolerance must be positive");
  const double tol =
      cfg.tol ? *cfg.tol : std::max(1e-3, 10.0 * wnorm * std::pow(static_cast<double>(n), -1.5));
  rep.tol = tol;

  // ---- strip the lowest order: T = I^{al} T', w' = D^{al} w ----
  const Rational alpha_l = eq.T.terms.back().order;
  const GenPoly sym = shift_exponents(eq.T, alpha_l);
  std::optional<GenPolyX> symX;
  if (eq.symbol_exact) symX = shift_exponents(*eq.symbol_exact, alpha_l);

  GridFunction wp_grid;
  std::optional<ExpPolyX> wp_exact;  // stripped rhs in closed form, when it exists
  if (alpha_l.is_zero()) {
    wp_grid = w_grid;
    if (const auto* e = std::get_if<ExpPolyX>(&eq.rhs)) wp_exact = *e;
  } else if (alpha_l.is_integer()) {
    if (const auto* e = std::get_if<ExpPolyX>(&eq.rhs)) {
      wp_exact = nth_derivative(*e, static_cast<int>(alpha_l.num));
      wp_grid = sample(*wp_exact, eq.a, eq.b, n);
    } else {
      wp_grid = w_grid;
      for (std::int64_t i = 0; i < alpha_l.num; ++i) wp_grid = grid_derivative(wp_grid);
      rep.diagnostics.push_back("right-hand side differentiated on the grid");
    }
  } else {
    // fractional strip: D^{m+beta} = (d/dt)^m D^beta on the grid
    const std::int64_t m = alpha_l.num / alpha_l.den;
    const Rational beta = alpha_l - Rational(m);
    wp_grid = gl_frac_derivative(w_grid, beta);
    for (std::int64_t i = 0; i < m; ++i) wp_grid = grid_derivative(wp_grid);
    rep.diagnostics.push_back(
        "fractional lowest order: right-hand side transformed on the grid, closed routes disabled");
  }

  // ---- conjugate the stripped symbol ----
  std::optional<ConjugateResultX> conjX;
  if (symX) {
    conjX = cfg.minimal ? conjugate_minimal_exact(*symX) : conjugate_naive_exact(*symX);
    if (!conjX)
      rep.diagnostics.push_back("exact conjugate unavailable; floating construction used");
  }
  std::vector<Complex> red;                 // c_0..c_n of the reduced equation
  std::optional<std::vector<RatComplex>> redX;
  if (conjX) {
    redX = conjX->reduced.coeffs_descending();
    red = to_complex_coeffs(*redX);
    rep.t_hat = operator_from_exact(conjX->p_hat, eq.a);
  } else {
    const ConjugateResult c =
        cfg.minimal ? conjugate_minimal(sym, cfg.cluster_tol) : conjugate_naive(sym);
    red = c.reduced.coeffs_descending();
    rep.t_hat = genpoly_to_operator(c.p_hat, eq.a);
    if (c.q > 1)
      rep.diagnostics.push_back("integrality defect " + std::to_string(c.integrality_defect));
  }
  rep.reduced_coeffs = red;
  const int n_red = static_cast<int>(red.size()) - 1;

  // ---- solve the reduced equation ----
  GridFunction x;
  bool have_x = false;

  if (method == Method::computing && wp_exact) {
    // (T' o T-hat) y = w', closed route, then x = T-hat y
    try {
      std::optional<ExpPolyX> y_exact;
      if (redX && eq.a == 0.0) {
        const std::vector<RatComplex> initX = initial_conditions_exact(*redX, *wp_exact);
        y_exact = solve_ode_closed_exact(*redX, nth_derivative(*wp_exact, n_red), initX);
        if (!y_exact)
          rep.diagnostics.push_back(
              "characteristic roots are not rational; floating closed route used");
      }
      ExpPoly y;
      if (y_exact) {
        y = to_floating(*y_exact);
      } else {
        const ExpPoly wpf = to_floating(*wp_exact);
        const auto [ode, rhs_n] = reduce_to_ode(red, wpf);
        const std::vector<Complex> init = initial_conditions(red, wpf, eq.a);
        y = solve_ode_closed(ode, rhs_n, init, eq.a, cfg.cluster_tol);
      }
      x = closed_pullback(rep.t_hat, y, eq.a, eq.b, n);
      rep.closed_exact = std::move(y_exact);
      rep.closed = std::move(y);
      have_x = true;
    } catch (const Error& e) {
      rep.diagnostics.push_back(std::string("closed route failed (") + e.what() +
                                "); grid stepping used");
      rep.closed_exact.reset();
      rep.closed.reset();
    }
  }

  if (!have_x) {
    if (method == Method::computing) {
      const GridFunction y = solve_volterra(red, wp_grid);
      x = apply_operator(rep.t_hat, y);
    } else {
      // checking: (T-hat o T') v = T-hat w', v is the solution candidate itself
      const GridFunction wpp = apply_operator(rep.t_hat, wp_grid);
      x = solve_volterra(red, wpp);
    }
  }

  // ---- certify against the original equation ----
  const GridFunction tx = apply_operator(eq.T, x);
  const double r = sup_distance(tx, w_grid, 1);
  rep.residual_sup = r;
  rep.solution = std::move(x);

  const double gross = std::max(tol, 0.05 * std::max(1.0, wnorm));
  if (r > gross)
    throw NoSolutionError("residual " + std::to_string(r) +
                          " grossly violates the equation; no integrable solution exists");
  rep.accepted = r <= tol;
  return rep;
}

}  // namespace

SolveReport solve_checking(const Equation& eq, const SolveConfig& cfg) {
  return solve_impl(eq, cfg, Method::checking);
}

SolveReport solve_computing(const Equation& eq, const SolveConfig& cfg) {
  return solve_impl(eq, cfg, Method::computing);
}

double residual(const Equation& eq, const GridFunction& x) {
  validate(x);
  GridFunction w;
  if (const auto* g = std::get_if<GridFunction>(&eq.rhs)) {
    w = *g;
  } else {
    w = sample(std::get<ExpPolyX>(eq.rhs), eq.a, eq.b, x.n);
  }
  const GridFunction tx = apply_operator(eq.T, x);
  return sup_distance(tx, w, 1);
}

std::vector<ConvergenceRow> convergence_study(const Equation& eq, const std::vector<int>& ns,
                                              const SolveConfig& cfg) {
  std::vector<ConvergenceRow> rows;
  for (const int n : ns) {
    SolveConfig c = cfg;
    c.n = n;
    const SolveReport rep =
        cfg.method == Method::checking ? solve_checking(eq, c) : solve_computing(eq, c);

    double wnorm = 1.0;
    if (const auto* g = std::get_if<GridFunction>(&eq.rhs))
      wnorm = std::max(1.0, sup_norm(*g));
    else
      wnorm = std::max(1.0, sup_norm(sample(std::get<ExpPolyX>(eq.rhs), eq.a, eq.b, rep.grid_n)));

    ConvergenceRow row;
    row.n = rep.grid_n;
    row.residual_sup = rep.residual_sup;
    row.saturated = rep.residual_sup <= 1e-13 * wnorm;
    if (!rows.empty() && rows.back().residual_sup > 0.0 && rep.residual_sup > 0.0)
      row.observed_order = std::log2(rows.back().residual_sup / rep.residual_sup);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fracreduce
