#include "fracreduce/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fracreduce/errors.hpp"
#include "fracreduce/special.hpp"

namespace fracreduce {

FracOperator make_operator(double base, std::vector<FracTerm> terms) {
  std::map<Rational, Complex> acc;
  for (const auto& t : terms) {
    if (t.order < Rational(0)) throw NegativeOrderError("operator order " + to_string(t.order));
    auto [it, fresh] = acc.try_emplace(t.order, t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  FracOperator T{base, {}};
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != Complex{}) T.terms.push_back({it->second, it->first});
  return T;
}

std::int64_t operator_denominator(const FracOperator& T) {
  std::int64_t q = 1;
  for (const auto& t : T.terms) q = lcm_i64(q, t.order.den);
  return q;
}

std::vector<Rational> startup_basis_for_denominator(std::int64_t q) {
  std::vector<Rational> out;
  for (std::int64_t j = 1; j <= 2 * q; ++j) {
    Rational e(j, q);
    if (!e.is_integer()) out.push_back(e);
  }
  return out;
}

namespace detail {

namespace {

// phi(s) = (s+1)^{a+1} - 2 s^{a+1} + (s-1)^{a+1}. The direct difference form
// loses precision once s is large (three O(s^{a+1}) terms cancelling down to
// O(s^{a-1})), so switch to the expansion
//   phi(s) = 2 s^{a+1} sum_{m>=1} C(a+1, 2m) s^{-2m}
// whose terms fall off by s^{-2} each.
double phi_series(double ap1, double s, const double* binom_even, int terms) {
  const double inv2 = 1.0 / (s * s);
  double x = inv2, sum = 0.0;
  for (int m = 1; m <= terms; ++m) {
    sum += binom_even[m] * x;
    x *= inv2;
  }
  return 2.0 * std::pow(s, ap1) * sum;
}

// a0(k) = (k-1)^{a+1} - k^a (k-a-1) = k^{a+1} sum_{m>=2} C(a+1, m) (-1/k)^m.
double a0_series(double kk, const double* binom, int terms) {
  const double inv = -1.0 / kk;
  double x = inv * inv, sum = 0.0;
  for (int m = 2; m <= terms; ++m) {
    sum += binom[m] * x;
    x *= inv;
  }
  return sum;  // caller multiplies by k^{a+1}
}

}  // namespace

TrapTables build_trap_tables(double alpha, double h, int n) {
  TrapTables t;
  t.factor = std::pow(h, alpha) / gamma_fn(alpha + 2.0);
  t.phi.assign(static_cast<std::size_t>(n) + 1, 0.0);
  t.a0.assign(static_cast<std::size_t>(n) + 1, 0.0);

  const double ap1 = alpha + 1.0;
  // generalized binomial coefficients C(a+1, m), m = 0..18
  double binom[19];
  binom[0] = 1.0;
  for (int m = 1; m <= 18; ++m) binom[m] = binom[m - 1] * (ap1 - (m - 1)) / m;
  double binom_even[10];
  for (int m = 1; m <= 9; ++m) binom_even[m] = binom[2 * m];

  for (int s = 1; s <= n; ++s) {
    if (s < 6) {
      t.phi[s] = std::pow(s + 1.0, ap1) - 2.0 * std::pow(static_cast<double>(s), ap1) +
                 std::pow(s - 1.0, ap1);
    } else {
      t.phi[s] = phi_series(ap1, static_cast<double>(s), binom_even, 9);
    }
  }
  for (int k = 1; k <= n; ++k) {
    if (k < 6) {
      t.a0[k] = std::pow(k - 1.0, ap1) - std::pow(static_cast<double>(k), alpha) * (k - alpha - 1.0);
    } else {
      t.a0[k] = std::pow(static_cast<double>(k), ap1) * a0_series(static_cast<double>(k), binom, 18);
    }
  }
  return t;
}

}  // namespace detail

namespace {

GridFunction plain_frac_integral(const GridFunction& f, double alpha) {
  const int n = f.n;
  GridFunction out = make_grid(f.a, f.b, n);
  const auto t = detail::build_trap_tables(alpha, f.h(), n);
  for (int k = 1; k <= n; ++k) {
    Complex acc = t.a0[k] * f.values[0];
    for (int s = 1; s < k; ++s) acc += t.phi[s] * f.values[static_cast<std::size_t>(k - s)];
    acc += f.values[static_cast<std::size_t>(k)];
    out.values[static_cast<std::size_t>(k)] = t.factor * acc;
  }
  return out;
}

// Starting-weight corrections: per output node k, add sum_i w_i(k) f(t_i)
// over the first m interior nodes, with w chosen so the corrected rule is
// exact on {1, t} union {t^sigma : sigma in startup}. All right-hand sides
// share one m x m generalized Vandermonde system M^T w = d, factored once.
struct StartupCorrector {
  int m = 0;
  std::vector<double> lu;        // m x m, row-major, LU in place
  std::vector<int> piv;
  std::vector<double> defects;   // (n+1) x m: d_j(k) scaled, j fastest
  std::vector<double> sigmas;    // exponents (for sizing only)

  bool active() const { return m > 0; }
};

// LU with partial pivoting on a dense m x m matrix (row-major).
void lu_factor(std::vector<double>& a, std::vector<int>& piv, int m) {
  piv.resize(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    int best = c;
    for (int r = c + 1; r < m; ++r)
      if (std::abs(a[static_cast<std::size_t>(r) * m + c]) >
          std::abs(a[static_cast<std::size_t>(best) * m + c]))
        best = r;
    piv[static_cast<std::size_t>(c)] = best;
    if (best != c)
      for (int j = 0; j < m; ++j)
        std::swap(a[static_cast<std::size_t>(c) * m + j], a[static_cast<std::size_t>(best) * m + j]);
    const double d = a[static_cast<std::size_t>(c) * m + c];
    if (d == 0.0) throw IllConditionedError("singular startup-correction system");
    for (int r = c + 1; r < m; ++r) {
      const double fac = a[static_cast<std::size_t>(r) * m + c] / d;
      a[static_cast<std::size_t>(r) * m + c] = fac;
      for (int j = c + 1; j < m; ++j)
        a[static_cast<std::size_t>(r) * m + j] -= fac * a[static_cast<std::size_t>(c) * m + j];
    }
  }
}

void lu_solve(const std::vector<double>& a, const std::vector<int>& piv, int m, double* x) {
  // the factorization swapped whole rows, so P must be applied in full before
  // the triangular solves (the multipliers live in final row order)
  for (int c = 0; c < m; ++c)
    if (piv[static_cast<std::size_t>(c)] != c) std::swap(x[c], x[piv[static_cast<std::size_t>(c)]]);
  for (int c = 0; c < m; ++c)
    for (int r = c + 1; r < m; ++r) x[r] -= a[static_cast<std::size_t>(r) * m + c] * x[c];
  for (int c = m - 1; c >= 0; --c) {
    for (int j = c + 1; j < m; ++j) x[c] -= a[static_cast<std::size_t>(c) * m + j] * x[j];
    x[c] /= a[static_cast<std::size_t>(c) * m + c];
  }
}

StartupCorrector build_corrector(const GridFunction& f, double alpha,
                                 const std::vector<Rational>& startup) {
  StartupCorrector sc;
  if (startup.empty()) return sc;

  std::vector<double> sig{0.0, 1.0};
  for (const auto& e : startup) sig.push_back(e.to_double());
  std::sort(sig.begin(), sig.end());
  sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
  const int m = static_cast<int>(sig.size());
  const int n = f.n;
  if (n < 2 * m) return sc;  // grid too coarse to correct; plain rule applies

  // Solve in the scaled variable tau = t/h: with nodes tau_i = i (i = 1..m),
  // sum_i w_i i^{sigma_j} = h^{-sigma_j} d_j(k).
  sc.m = m;
  sc.sigmas = sig;
  sc.lu.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      sc.lu[static_cast<std::size_t>(j) * m + i] = std::pow(i + 1.0, sig[static_cast<std::size_t>(j)]);
  lu_factor(sc.lu, sc.piv, m);

  const double h = f.h();
  sc.defects.assign((static_cast<std::size_t>(n) + 1) * m, 0.0);
  for (int j = 0; j < m; ++j) {
    const double s = sig[static_cast<std::size_t>(j)];
    // base-rule values on samples of t^s (t measured from the base point)
    GridFunction ps = sample_grid(f.a, f.b, n, [&](double t) { return std::pow(t - f.a, s); });
    GridFunction qs = plain_frac_integral(ps, alpha);
    const double mom = gamma_fn(s + 1.0) / gamma_fn(s + alpha + 1.0);
    const double hs = std::pow(h, s);
    for (int k = 1; k <= n; ++k) {
      const double tk = (f.b - f.a) * k / n;
      const double exact = mom * std::pow(tk, s + alpha);
      sc.defects[static_cast<std::size_t>(k) * m + j] =
          (exact - qs.values[static_cast<std::size_t>(k)].real()) / hs;
    }
  }
  return sc;
}

}  // namespace

GridFunction frac_integral(const GridFunction& f, const Rational& alpha,
                           const QuadratureOptions& opt) {
  validate(f);
  if (!(Rational(0) < alpha)) throw OrderOutOfRangeError("integration order must be positive");
  const double a = alpha.to_double();
  GridFunction out = plain_frac_integral(f, a);

  const StartupCorrector sc = build_corrector(f, a, opt.startup);
  if (sc.active()) {
    std::vector<double> w(static_cast<std::size_t>(sc.m));
    for (int k = 1; k <= f.n; ++k) {
      for (int i = 0; i < sc.m; ++i)
        w[static_cast<std::size_t>(i)] = sc.defects[static_cast<std::size_t>(k) * sc.m + i];
      lu_solve(sc.lu, sc.piv, sc.m, w.data());
      Complex corr{};
      for (int i = 0; i < sc.m; ++i)
        corr += w[static_cast<std::size_t>(i)] * f.values[static_cast<std::size_t>(i) + 1];
      out.values[static_cast<std::size_t>(k)] += corr;
    }
  }
  return out;
}

GridFunction gl_frac_derivative(const GridFunction& f, const Rational& alpha) {
  validate(f);
  if (!(Rational(0) < alpha) || !(alpha < Rational(1)))
    throw OrderOutOfRangeError("Grunwald-Letnikov derivative needs order in (0,1), got " +
                               to_string(alpha));
  const double a = alpha.to_double();
  const int n = f.n;
  std::vector<double> g(static_cast<std::size_t>(n) + 1);
  g[0] = 1.0;
  for (int j = 1; j <= n; ++j) g[static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(j - 1)] * (j - 1 - a) / j;
  const double scale = std::pow(f.h(), -a);
  GridFunction out = make_grid(f.a, f.b, n);
  for (int k = 0; k <= n; ++k) {
    Complex acc{};
    for (int j = 0; j <= k; ++j) acc += g[static_cast<std::size_t>(j)] * f.values[static_cast<std::size_t>(k - j)];
    out.values[static_cast<std::size_t>(k)] = scale * acc;
  }
  return out;
}

GridFunction apply_operator(const FracOperator& T, const GridFunction& f,
                            const QuadratureOptions& opt) {
  validate(f);
  if (std::abs(T.base - f.a) > 1e-12 * std::max(1.0, std::abs(T.base)))
    throw BaseMismatchError("operator base " + std::to_string(T.base) +
                            " does not match grid start " + std::to_string(f.a));
  GridFunction out = make_grid(f.a, f.b, f.n);
  for (const auto& term : T.terms) {
    if (term.order.is_zero()) {
      for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] += term.coeff * f.values[k];
    } else {
      const GridFunction part = frac_integral(f, term.order, opt);
      for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] += term.coeff * part.values[k];
    }
  }
  return out;
}

GridFunction apply_operator(const FracOperator& T, const GridFunction& f) {
  const std::int64_t q = operator_denominator(T);
  QuadratureOptions opt;
  if (q > 1) opt.startup = startup_basis_for_denominator(q);
  return apply_operator(T, f, opt);
}

}  // namespace fracreduce
