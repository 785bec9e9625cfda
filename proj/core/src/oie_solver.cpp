#include "fracreduce/oie_solver.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fracreduce/errors.hpp"
#include "fracreduce/rootfind.hpp"

namespace fracreduce {

GridFunction solve_volterra(const std::vector<Complex>& coeffs, const GridFunction& rhs) {
  if (coeffs.empty()) throw Error("empty coefficient list");
  validate(rhs);
  const int n = static_cast<int>(coeffs.size()) - 1;
  double maxc = 0.0;
  for (const auto& c : coeffs) maxc = std::max(maxc, std::abs(c));
  const Complex cn = coeffs.back();
  if (std::abs(cn) <= 1e-14 * maxc)
    throw FirstKindUnsupportedError("no identity term: the discrete equation is of the first kind");

  GridFunction x = rhs;
  if (n == 0) {
    for (auto& v : x.values) v /= cn;
    return x;
  }

  const double h = rhs.h();
  std::vector<detail::TrapTables> tab(static_cast<std::size_t>(n) + 1);
  for (int l = 1; l <= n; ++l)
    tab[static_cast<std::size_t>(l)] = detail::build_trap_tables(static_cast<double>(l), h, rhs.n);

  // diagonal of the lower-triangular system is constant across rows
  Complex diag = cn;
  double dscale = std::abs(cn);
  for (int l = 1; l <= n; ++l) {
    const Complex w = coeffs[static_cast<std::size_t>(n - l)] * tab[static_cast<std::size_t>(l)].factor;
    diag += w;
    dscale += std::abs(w);
  }
  if (std::abs(diag) <= 1e-14 * dscale)
    throw SingularStepError("stepping coefficient vanished at the current mesh width");

  x.values[0] = rhs.values[0] / cn;  // every integral term is 0 at the base point
  for (int k = 1; k <= rhs.n; ++k) {
    Complex acc = rhs.values[static_cast<std::size_t>(k)];
    for (int l = 1; l <= n; ++l) {
      const auto& t = tab[static_cast<std::size_t>(l)];
      Complex conv = t.a0[static_cast<std::size_t>(k)] * x.values[0];
      for (int s = 1; s < k; ++s)
        conv += t.phi[static_cast<std::size_t>(s)] * x.values[static_cast<std::size_t>(k - s)];
      acc -= coeffs[static_cast<std::size_t>(n - l)] * t.factor * conv;
    }
    x.values[static_cast<std::size_t>(k)] = acc / diag;
  }
  return x;
}

GridFunction solve_volterra(const IntOrderEquation& eq) {
  const auto* grid = std::get_if<GridFunction>(&eq.rhs);
  if (grid == nullptr) throw DomainError("grid stepping needs a sampled right-hand side");
  if (std::abs(grid->a - eq.base) > 1e-12 * std::max(1.0, std::abs(eq.base)))
    throw BaseMismatchError("right-hand side grid does not start at the base point");
  return solve_volterra(eq.coeffs, *grid);
}

std::pair<std::vector<Complex>, ExpPoly> reduce_to_ode(const std::vector<Complex>& coeffs,
                                                       const ExpPoly& rhs) {
  if (coeffs.empty()) throw Error("empty coefficient list");
  const int n = static_cast<int>(coeffs.size()) - 1;
  // D^n (c_j I^{n-j} x) = c_j x^{(j)}: the list re-reads as ascending
  // derivative coefficients with no renumbering.
  return {coeffs, nth_derivative(rhs, n)};
}

std::vector<Complex> initial_conditions(const std::vector<Complex>& coeffs, const ExpPoly& rhs,
                                        double a) {
  if (coeffs.empty()) throw Error("empty coefficient list");
  const int n = static_cast<int>(coeffs.size()) - 1;
  double maxc = 0.0;
  for (const auto& c : coeffs) maxc = std::max(maxc, std::abs(c));
  const Complex cn = coeffs.back();
  if (std::abs(cn) <= 1e-14 * maxc)
    throw DegenerateLeadingError("identity coefficient vanishes; no initial data is implied");

  std::vector<Complex> init;
  ExpPoly cur = rhs;
  for (int k = 0; k < n; ++k) {
    // c_n x^{(k)}(a) + sum_{j=1..k} c_{n-j} x^{(k-j)}(a) = rhs^{(k)}(a)
    Complex acc = eval(cur, a);
    for (int j = 1; j <= k; ++j)
      acc -= coeffs[static_cast<std::size_t>(n - j)] * init[static_cast<std::size_t>(k - j)];
    init.push_back(acc / cn);
    if (k + 1 < n) cur = derivative(cur);
  }
  return init;
}

std::vector<RatComplex> initial_conditions_exact(const std::vector<RatComplex>& coeffs,
                                                 const ExpPolyX& rhs) {
  if (coeffs.empty()) throw Error("empty coefficient list");
  const int n = static_cast<int>(coeffs.size()) - 1;
  const RatComplex cn = coeffs.back();
  if (cn.is_zero())
    throw DegenerateLeadingError("identity coefficient vanishes; no initial data is implied");

  std::vector<RatComplex> init;
  ExpPolyX cur = rhs;
  for (int k = 0; k < n; ++k) {
    RatComplex acc = eval_at_zero(cur);
    for (int j = 1; j <= k; ++j)
      acc = acc - coeffs[static_cast<std::size_t>(n - j)] * init[static_cast<std::size_t>(k - j)];
    init.push_back(acc / cn);
    if (k + 1 < n) cur = derivative(cur);
  }
  return init;
}

namespace {

// L(t^r e^{lt}) = e^{lt} sum_i char^{(i)}(l)/i! * r!/(r-i)! * t^{r-i}; the
// particular solution comes from matching coefficients downward from the top
// degree, which is triangular because K_i = 0 for i below the root
// multiplicity s0 at the forcing exponent.
template <class S>
IntPolyT<S> particular_poly(const std::vector<S>& K, int s0, const IntPolyT<S>& p) {
  const int d = p.degree();
  std::vector<S> b(static_cast<std::size_t>(d) + 1, S{});
  const auto fact_ratio = [](int hi, int lo) {  // hi! / lo!
    S r = ScalarTraits<S>::from_int(1);
    for (int i = lo + 1; i <= hi; ++i) r = r * ScalarTraits<S>::from_int(i);
    return r;
  };
  for (int j = d; j >= 0; --j) {
    S acc = p.c[static_cast<std::size_t>(j)];
    for (int m = j + 1; m <= d; ++m) {
      const int i = s0 + m - j;
      if (i >= static_cast<int>(K.size())) continue;
      acc = acc - b[static_cast<std::size_t>(m)] * K[static_cast<std::size_t>(i)] *
                      fact_ratio(s0 + m, j);
    }
    b[static_cast<std::size_t>(j)] =
        acc / (K[static_cast<std::size_t>(s0)] * fact_ratio(s0 + j, j));
  }
  IntPolyT<S> out;
  out.c.assign(static_cast<std::size_t>(s0 + d) + 1, S{});
  for (int j = 0; j <= d; ++j) out.c[static_cast<std::size_t>(s0 + j)] = b[static_cast<std::size_t>(j)];
  return out;
}

// char^{(i)}(l) / i! for i = 0..deg
template <class S, class L>
std::vector<S> taylor_at(const IntPolyT<S>& ch, const L& l) {
  std::vector<S> K;
  IntPolyT<S> cur = ch;
  S fact = ScalarTraits<S>::from_int(1);
  for (int i = 0; i <= ch.degree(); ++i) {
    if (i > 0) fact = fact * ScalarTraits<S>::from_int(i);
    K.push_back(cur.template eval<S>(l) / fact);
    cur = derivative(cur);
  }
  return K;
}

double exp_mag(const ExpPoly& e) {
  double m = 0.0;
  for (const auto& t : e.terms)
    for (const auto& c : t.poly.c) m = std::max(m, std::abs(c));
  return m;
}

void verify_closed(const std::vector<Complex>& ode, const ExpPoly& rhs,
                   const std::vector<Complex>& init, double a, const ExpPoly& x) {
  ExpPoly lx;
  ExpPoly cur = x;
  for (std::size_t j = 0; j < ode.size(); ++j) {
    lx = add(lx, scale(cur, ode[j]));
    if (j + 1 < ode.size()) cur = derivative(cur);
  }
  double scale_mag = std::max(1.0, exp_mag(rhs));
  for (const auto& v : init) scale_mag = std::max(scale_mag, std::abs(v));
  const ExpPoly diff = add(lx, scale(rhs, Complex{-1.0, 0.0}));
  if (exp_mag(diff) > 1e-7 * scale_mag)
    throw NonConvergenceError("closed-form candidate fails to satisfy the equation (defect " +
                              std::to_string(exp_mag(diff)) + ")");
  ExpPoly der = x;
  for (std::size_t k = 0; k < init.size(); ++k) {
    if (std::abs(eval(der, a) - init[k]) > 1e-7 * std::max(1.0, std::abs(init[k])))
      throw NonConvergenceError("closed-form candidate misses the initial data");
    if (k + 1 < init.size()) der = derivative(der);
  }
}

}  // namespace

ExpPoly solve_ode_closed(const std::vector<Complex>& ode_coeffs, const ExpPoly& rhs,
                         const std::vector<Complex>& init, double a, double cluster_tol) {
  if (ode_coeffs.empty()) throw Error("empty coefficient list");
  const int n = static_cast<int>(ode_coeffs.size()) - 1;
  double maxc = 0.0;
  for (const auto& c : ode_coeffs) maxc = std::max(maxc, std::abs(c));
  if (std::abs(ode_coeffs.back()) <= 1e-14 * maxc)
    throw DegenerateLeadingError("leading derivative coefficient vanishes");
  if (static_cast<int>(init.size()) != n) throw Error("initial data size mismatch");

  if (n == 0) {
    ExpPoly x = scale(rhs, Complex{1.0, 0.0} / ode_coeffs[0]);
    verify_closed(ode_coeffs, rhs, init, a, x);
    return x;
  }

  IntPoly ch;
  ch.c = ode_coeffs;
  RootSet rs = find_roots(ch, cluster_tol);

  // snap characteristic roots onto forcing exponents they all but equal, so
  // resonance is decided structurally rather than by floating accident
  for (auto& [root, mult] : rs.roots)
    for (const auto& term : rhs.terms)
      if (std::abs(root - term.lambda) <= 1e-7 * std::max(1.0, std::abs(term.lambda)))
        root = term.lambda;
  std::vector<std::pair<Complex, int>> roots;
  for (const auto& [root, mult] : rs.roots) {
    bool merged = false;
    for (auto& [r2, m2] : roots)
      if (r2 == root) {
        m2 += mult;
        merged = true;
        break;
      }
    if (!merged) roots.push_back({root, mult});
  }

  // particular solution, one resonance-shifted ansatz per forcing exponent
  std::vector<ExpTerm<Complex>> part_raw;
  for (const auto& term : rhs.terms) {
    int s0 = 0;
    for (const auto& [root, mult] : roots)
      if (root == term.lambda) s0 = mult;
    const std::vector<Complex> K = taylor_at(ch, term.lambda);
    part_raw.push_back({term.lambda, particular_poly(K, s0, term.poly)});
  }
  const ExpPoly part = make_exppoly(std::move(part_raw));

  // homogeneous basis t^s e^{root t}, s = 0..mult-1
  std::vector<ExpPoly> basis;
  for (const auto& [root, mult] : roots)
    for (int s = 0; s < mult; ++s) {
      IntPoly mono;
      mono.c.assign(static_cast<std::size_t>(s) + 1, Complex{});
      mono.c.back() = Complex{1.0, 0.0};
      basis.push_back(make_exppoly<Complex>({{root, mono}}));
    }

  // constants from x^{(k)}(a) = init_k, k = 0..n-1
  std::vector<std::vector<Complex>> A(static_cast<std::size_t>(n),
                                      std::vector<Complex>(static_cast<std::size_t>(n) + 1));
  ExpPoly pder = part;
  std::vector<ExpPoly> bder = basis;
  for (int k = 0; k < n; ++k) {
    for (int c = 0; c < n; ++c)
      A[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] =
          eval(bder[static_cast<std::size_t>(c)], a);
    A[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] = init[static_cast<std::size_t>(k)] - eval(pder, a);
    if (k + 1 < n) {
      pder = derivative(pder);
      for (auto& b : bder) b = derivative(b);
    }
  }

  // Gaussian elimination with partial pivoting; the pivot spread doubles as a
  // cheap condition estimate
  double piv_max = 0.0, piv_min = INFINITY;
  for (int col = 0; col < n; ++col) {
    int best = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
          std::abs(A[static_cast<std::size_t>(best)][static_cast<std::size_t>(col)]))
        best = r;
    std::swap(A[static_cast<std::size_t>(col)], A[static_cast<std::size_t>(best)]);
    const Complex p = A[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    piv_max = std::max(piv_max, std::abs(p));
    piv_min = std::min(piv_min, std::abs(p));
    if (std::abs(p) == 0.0) throw IllConditionedError("singular system for the free constants");
    for (int r = col + 1; r < n; ++r) {
      const Complex f = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / p;
      if (f == Complex{}) continue;
      for (int c = col; c <= n; ++c)
        A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * A[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }
  if (piv_max / piv_min > 1e12)
    throw IllConditionedError("free-constant system condition estimate " +
                              std::to_string(piv_max / piv_min));
  std::vector<Complex> C(static_cast<std::size_t>(n));
  for (int r = n - 1; r >= 0; --r) {
    Complex acc = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
    for (int c = r + 1; c < n; ++c)
      acc -= A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * C[static_cast<std::size_t>(c)];
    C[static_cast<std::size_t>(r)] = acc / A[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
  }

  ExpPoly x = part;
  for (int c = 0; c < n; ++c)
    x = add(x, scale(basis[static_cast<std::size_t>(c)], C[static_cast<std::size_t>(c)]));
  verify_closed(ode_coeffs, rhs, init, a, x);
  return x;
}

std::optional<ExpPolyX> solve_ode_closed_exact(const std::vector<RatComplex>& ode_coeffs,
                                               const ExpPolyX& rhs,
                                               const std::vector<RatComplex>& init) {
  if (ode_coeffs.empty()) throw Error("empty coefficient list");
  const int n = static_cast<int>(ode_coeffs.size()) - 1;
  if (ode_coeffs.back().is_zero())
    throw DegenerateLeadingError("leading derivative coefficient vanishes");
  if (static_cast<int>(init.size()) != n) throw Error("initial data size mismatch");

  IntPolyX ch;
  ch.c = ode_coeffs;

  if (n == 0) {
    ExpPolyX x = scale(rhs, RatComplex(1) / ode_coeffs[0]);
    return x;
  }

  const RationalRootSplit split = find_rational_roots(ch);
  if (!split.complete) return std::nullopt;

  std::vector<ExpTerm<RatComplex>> part_raw;
  for (const auto& term : rhs.terms) {
    int s0 = 0;
    for (const auto& [root, mult] : split.roots)
      if (term.lambda.is_real() && term.lambda.re == root) s0 = mult;
    const std::vector<RatComplex> K = taylor_at(ch, term.lambda);
    part_raw.push_back({term.lambda, particular_poly(K, s0, term.poly)});
  }
  const ExpPolyX part = make_exppoly(std::move(part_raw));

  std::vector<ExpPolyX> basis;
  for (const auto& [root, mult] : split.roots)
    for (int s = 0; s < mult; ++s) {
      IntPolyX mono;
      mono.c.assign(static_cast<std::size_t>(s) + 1, RatComplex{});
      mono.c.back() = RatComplex(1);
      basis.push_back(make_exppoly<RatComplex>({{RatComplex(root), mono}}));
    }

  std::vector<std::vector<RatComplex>> A(static_cast<std::size_t>(n),
                                         std::vector<RatComplex>(static_cast<std::size_t>(n) + 1));
  ExpPolyX pder = part;
  std::vector<ExpPolyX> bder = basis;
  for (int k = 0; k < n; ++k) {
    for (int c = 0; c < n; ++c)
      A[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] =
          eval_at_zero(bder[static_cast<std::size_t>(c)]);
    A[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] =
        init[static_cast<std::size_t>(k)] - eval_at_zero(pder);
    if (k + 1 < n) {
      pder = derivative(pder);
      for (auto& b : bder) b = derivative(b);
    }
  }

  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("internal: singular exact system for the free constants");
    std::swap(A[static_cast<std::size_t>(col)], A[static_cast<std::size_t>(piv)]);
    const RatComplex p = A[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int r = col + 1; r < n; ++r) {
      const RatComplex f = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / p;
      if (f.is_zero()) continue;
      for (int c = col; c <= n; ++c)
        A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
            f * A[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }
  std::vector<RatComplex> C(static_cast<std::size_t>(n));
  for (int r = n - 1; r >= 0; --r) {
    RatComplex acc = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
    for (int c = r + 1; c < n; ++c)
      acc = acc -
            A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * C[static_cast<std::size_t>(c)];
    C[static_cast<std::size_t>(r)] = acc / A[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
  }

  ExpPolyX x = part;
  for (int c = 0; c < n; ++c)
    x = add(x, scale(basis[static_cast<std::size_t>(c)], C[static_cast<std::size_t>(c)]));

  // exact plug-back: any disagreement is an implementation defect
  ExpPolyX lx;
  ExpPolyX cur = x;
  for (std::size_t j = 0; j < ode_coeffs.size(); ++j) {
    lx = add(lx, scale(cur, ode_coeffs[j]));
    if (j + 1 < ode_coeffs.size()) cur = derivative(cur);
  }
  if (!add(lx, scale(rhs, RatComplex(-1))).is_zero())
    throw Error("internal: exact closed form fails the equation");
  ExpPolyX der = x;
  for (std::size_t k = 0; k < init.size(); ++k) {
    if (!(eval_at_zero(der) == init[k]))
      throw Error("internal: exact closed form misses the initial data");
    if (k + 1 < init.size()) der = derivative(der);
  }
  return x;
}

}  // namespace fracreduce
