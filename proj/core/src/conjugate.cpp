#include "fracreduce/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "fracreduce/errors.hpp"

namespace fracreduce {

namespace {

// Dense product without magnitude-based trimming: the conjugate constructions
// depend on exponent positions, so structural shape must be preserved even
// when a leading coefficient happens to be small.
template <class S>
IntPolyT<S> mul_dense(const IntPolyT<S>& a, const IntPolyT<S>& b) {
  IntPolyT<S> out;
  out.c.assign(a.c.size() + b.c.size() - 1, S{});
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = out.c[i + j] + a.c[i] * b.c[j];
  return out;
}

template <class S>
IntPolyT<S> linear(const S& root) {
  IntPolyT<S> l;
  l.c = {S{} - root, ScalarTraits<S>::from_int(1)};
  return l;
}

template <class S>
void set_trivial(ConjugateResultT<S>& out, IntPolyT<S> P) {
  out.p_hat = make_genpoly<S>({{ScalarTraits<S>::from_int(1), Rational(0)}});
  out.reduced = std::move(P);
}

// Shared tail of the floating constructions: P * PH is split by exponent
// residue mod q; the stride-q part becomes the reduced polynomial and the
// largest off-stride magnitude is reported as the integrality defect.
void finish_stride(const IntPoly& P, const IntPoly& PH, ConjugateResult& out) {
  const IntPoly full = mul_dense(P, PH);
  const std::size_t q = static_cast<std::size_t>(out.q);
  IntPoly red;
  red.c.assign((full.c.size() - 1) / q + 1, Complex{});
  double defect = 0.0;
  for (std::size_t i = 0; i < full.c.size(); ++i) {
    if (i % q == 0)
      red.c[i / q] = full.c[i];
    else
      defect = std::max(defect, std::abs(full.c[i]));
  }
  out.reduced = std::move(red);
  out.integrality_defect = defect;
  out.p_hat = substitute_up(PH, out.q);
}

std::vector<Complex> xi_table(std::int64_t q) {
  std::vector<Complex> xi(static_cast<std::size_t>(q));
  for (std::int64_t k = 0; k < q; ++k)
    xi[static_cast<std::size_t>(k)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q));
  return xi;
}

}  // namespace

ConjugateResult conjugate_naive(const GenPoly& p) {
  if (p.empty()) throw ZeroPolynomialError("conjugate of the zero polynomial");
  ConjugateResult out;
  out.q = common_denominator(p);
  const IntPoly P = substitute_down(p, out.q);
  if (out.q == 1) {
    set_trivial(out, P);
    return out;
  }
  const auto xi = xi_table(out.q);
  const std::int64_t N = P.degree();
  IntPoly PH = IntPoly::constant(Complex{1.0, 0.0});
  for (std::int64_t j = 1; j < out.q; ++j) {
    // xi^{jN} P(xi^{-j} Y): coefficient of Y^i picks up xi^{j(N-i)}
    IntPoly F;
    F.c.resize(P.c.size());
    for (std::int64_t i = 0; i <= N; ++i)
      F.c[static_cast<std::size_t>(i)] =
          P.c[static_cast<std::size_t>(i)] * xi[static_cast<std::size_t>((j * (N - i)) % out.q)];
    PH = mul_dense(PH, F);
  }
  finish_stride(P, PH, out);
  return out;
}

ConjugateResult conjugate_minimal(const GenPoly& p, double cluster_tol) {
  if (p.empty()) throw ZeroPolynomialError("conjugate of the zero polynomial");
  ConjugateResult out;
  out.q = common_denominator(p);
  const IntPoly P = substitute_down(p, out.q);
  if (out.q == 1) {
    set_trivial(out, P);
    return out;
  }

  double maxc = 0.0;
  for (const auto& c : P.c) maxc = std::max(maxc, std::abs(c));
  IntPoly work = P;
  int zeros = 0;  // structural zero roots come off before the root finder
  while (work.degree() > 0 && std::abs(work.c.front()) <= 1e-14 * maxc) {
    work.c.erase(work.c.begin());
    ++zeros;
  }

  const auto xi = xi_table(out.q);
  IntPoly PH = IntPoly::constant(Complex{1.0, 0.0});
  if (work.degree() > 0) {
    const RootSet rs = find_roots(work, cluster_tol);
    const OrbitSet os = cluster_orbits(rs, out.q, cluster_tol);
    for (const Orbit& orb : os.orbits) {
      if (std::abs(orb.representative) == 0.0) {
        zeros += orb.mult[0];
        continue;
      }
      const int m = *std::max_element(orb.mult.begin(), orb.mult.end());
      for (std::int64_t j = 0; j < out.q; ++j) {
        const Complex member = orb.representative * xi[static_cast<std::size_t>(j)];
        for (int k = orb.mult[static_cast<std::size_t>(j)]; k < m; ++k)
          PH = mul_dense(PH, linear(member));
      }
    }
  }
  // zero roots: round the total multiplicity up to the next multiple of q
  const int pad = static_cast<int>((zeros + out.q - 1) / out.q * out.q) - zeros;
  if (pad > 0) {
    IntPoly mono;
    mono.c.assign(static_cast<std::size_t>(pad) + 1, Complex{});
    mono.c.back() = Complex{1.0, 0.0};
    PH = mul_dense(PH, mono);
  }
  finish_stride(P, PH, out);
  return out;
}

namespace {

RatComplex pow_rc(const RatComplex& v, std::int64_t e) {
  RatComplex acc(1);
  for (std::int64_t i = 0; i < e; ++i) acc = acc * v;
  return acc;
}

BigRat pow_rat(const BigRat& v, std::int64_t e) {
  BigRat acc = 1;
  for (std::int64_t i = 0; i < e; ++i) acc *= v;
  return acc;
}

// The exact constructions assemble the reduced polynomial first and obtain
// p_hat as reduced(Y^q) / P(Y); the division is exact by construction, so a
// nonzero remainder indicates a defect in the caller, not in the input.
ConjugateResultX divide_route(const IntPolyX& P, IntPolyX red, ConjugateResultX out) {
  IntPolyX up;
  up.c.assign(static_cast<std::size_t>(red.degree()) * static_cast<std::size_t>(out.q) + 1,
              RatComplex{});
  for (std::size_t i = 0; i < red.c.size(); ++i)
    up.c[i * static_cast<std::size_t>(out.q)] = red.c[i];
  auto [quot, rem] = divide(up, P);
  if (!rem.is_zero()) throw Error("internal: exact conjugate division left a remainder");
  out.reduced = std::move(red);
  out.p_hat = substitute_up(quot, out.q);
  return out;
}

}  // namespace

std::optional<ConjugateResultX> conjugate_naive_exact(const GenPolyX& p) {
  if (p.empty()) throw ZeroPolynomialError("conjugate of the zero polynomial");
  ConjugateResultX out;
  out.q = common_denominator(p);
  const IntPolyX P = substitute_down(p, out.q);
  if (out.q == 1) {
    set_trivial(out, P);
    return out;
  }

  if (out.q == 2 || out.q == 4) {
    // the primitive root of unity is Gaussian-rational: rotate exactly
    std::vector<RatComplex> xi;
    if (out.q == 2)
      xi = {RatComplex(1), RatComplex(-1)};
    else
      xi = {RatComplex(1), RatComplex(BigRat(0), BigRat(1)), RatComplex(-1),
            RatComplex(BigRat(0), BigRat(-1))};
    const std::int64_t N = P.degree();
    IntPolyX PH = IntPolyX::constant(RatComplex(1));
    for (std::int64_t j = 1; j < out.q; ++j) {
      IntPolyX F;
      F.c.resize(P.c.size());
      for (std::int64_t i = 0; i <= N; ++i)
        F.c[static_cast<std::size_t>(i)] =
            P.c[static_cast<std::size_t>(i)] * xi[static_cast<std::size_t>((j * (N - i)) % out.q)];
      PH = mul_dense(PH, F);
    }
    const IntPolyX full = mul_dense(P, PH);
    const std::size_t q = static_cast<std::size_t>(out.q);
    IntPolyX red;
    red.c.assign((full.c.size() - 1) / q + 1, RatComplex{});
    for (std::size_t i = 0; i < full.c.size(); ++i) {
      if (i % q == 0)
        red.c[i / q] = full.c[i];
      else if (!full.c[i].is_zero())
        throw Error("internal: exact rotation product has a fractional term");
    }
    out.reduced = std::move(red);
    out.p_hat = substitute_up(PH, out.q);
    return out;
  }

  // other q: the rotation is irrational, but rational roots still give an
  // exact answer through reduced = c1^q prod_i (X - r_i^q)
  for (const auto& c : P.c)
    if (!c.is_real()) return std::nullopt;
  const RationalRootSplit split = find_rational_roots(P);
  if (!split.complete) return std::nullopt;

  IntPolyX red = IntPolyX::constant(pow_rc(P.leading(), out.q));
  for (const auto& [r, m] : split.roots) {
    const IntPolyX lin = linear(RatComplex(pow_rat(r, out.q)));
    for (int i = 0; i < m; ++i) red = mul_dense(red, lin);
  }
  return divide_route(P, std::move(red), std::move(out));
}

std::optional<ConjugateResultX> conjugate_minimal_exact(const GenPolyX& p) {
  if (p.empty()) throw ZeroPolynomialError("conjugate of the zero polynomial");
  ConjugateResultX out;
  out.q = common_denominator(p);
  const IntPolyX P = substitute_down(p, out.q);
  if (out.q == 1) {
    set_trivial(out, P);
    return out;
  }

  for (const auto& c : P.c)
    if (!c.is_real()) return std::nullopt;
  const RationalRootSplit split = find_rational_roots(P);
  if (!split.complete) return std::nullopt;

  std::int64_t k0 = 0;
  std::vector<std::pair<BigRat, int>> rest;
  for (const auto& [r, m] : split.roots) {
    if (r == 0)
      k0 = m;
    else
      rest.push_back({r, m});
  }

  IntPolyX red = IntPolyX::constant(P.leading());
  const std::int64_t m0 = (k0 + out.q - 1) / out.q;
  for (std::int64_t i = 0; i < m0; ++i) red = mul_dense(red, linear(RatComplex(0)));

  // among rationals the only xi-relation is r <-> -r, available when q is even
  std::vector<bool> used(rest.size(), false);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    int m = rest[i].second;
    if (out.q % 2 == 0) {
      for (std::size_t j = i + 1; j < rest.size(); ++j)
        if (!used[j] && rest[j].first == -rest[i].first) {
          used[j] = true;
          m = std::max(m, rest[j].second);
        }
    }
    const IntPolyX lin = linear(RatComplex(pow_rat(rest[i].first, out.q)));
    for (int k = 0; k < m; ++k) red = mul_dense(red, lin);
  }
  return divide_route(P, std::move(red), std::move(out));
}

}  // namespace fracreduce
