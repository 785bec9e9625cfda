#include "fracreduce/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fracreduce/errors.hpp"

namespace fracreduce {

namespace {

// Durand-Kerner simultaneous iteration on a monic polynomial (ascending
// coefficients, leading 1 implicit in `monic` having leading == 1). Multiple
// roots converge linearly to a cluster of radius ~eps^{1/m}; no deflation, so
// the root set as a whole stays faithful to the input.
std::vector<Complex> durand_kerner(const IntPoly& monic) {
  const int d = monic.degree();
  double maxc = 0.0;
  for (const auto& c : monic.c) maxc = std::max(maxc, std::abs(c));
  const double cauchy = 1.0 + maxc;
  double rho = std::pow(std::abs(monic.c[0]), 1.0 / d);  // geometric mean of |roots|
  if (!(rho > 1e-3)) rho = 1e-3;
  rho = std::min(rho, cauchy);

  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const double th = 2.0 * std::numbers::pi * i / d + 0.4;
    z[static_cast<std::size_t>(i)] = std::polar(rho, th);
  }

  double best = INFINITY;
  int stall = 0;
  for (int iter = 0; iter < 800; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
      const Complex zi = z[static_cast<std::size_t>(i)];
      Complex denom{1.0, 0.0};
      for (int j = 0; j < d; ++j)
        if (j != i) denom *= zi - z[static_cast<std::size_t>(j)];
      const Complex delta = monic.eval(zi) / denom;
      z[static_cast<std::size_t>(i)] = zi - delta;
      worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(zi)));
    }
    if (!std::isfinite(worst)) throw NonConvergenceError("root iteration diverged");
    if (worst < 1e-15) return z;
    if (worst < best * 0.75) {
      best = worst;
      stall = 0;
    } else if (++stall > 60) {
      return z;  // stagnated at the attainable accuracy (multiple roots)
    }
  }
  return z;
}

std::vector<std::pair<Complex, int>> cluster_points(const std::vector<Complex>& z, double tol) {
  const int d = static_cast<int>(z.size());
  std::vector<int> group(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) group[static_cast<std::size_t>(i)] = i;
  const auto find = [&](int i) {
    while (group[static_cast<std::size_t>(i)] != i) i = group[static_cast<std::size_t>(i)];
    return i;
  };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double lim = tol * std::max({1.0, std::abs(z[static_cast<std::size_t>(i)]),
                                         std::abs(z[static_cast<std::size_t>(j)])});
      if (std::abs(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]) <= lim)
        group[find(i)] = find(j);
    }
  std::vector<std::pair<Complex, int>> out;
  for (int i = 0; i < d; ++i) {
    if (find(i) != i) continue;
    Complex mean{};
    int count = 0;
    for (int j = 0; j < d; ++j)
      if (find(j) == i) {
        mean += z[static_cast<std::size_t>(j)];
        ++count;
      }
    out.push_back({mean / static_cast<double>(count), count});
  }
  return out;
}

IntPoly expand_monic(const std::vector<std::pair<Complex, int>>& roots) {
  IntPoly p = IntPoly::constant({1.0, 0.0});
  for (const auto& [v, m] : roots)
    for (int i = 0; i < m; ++i) {
      IntPoly lin;
      lin.c = {-v, {1.0, 0.0}};
      p = mul(p, lin);
    }
  return p;
}

}  // namespace

RootSet find_roots(const IntPoly& P, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw InvalidToleranceError("clustering tolerance must be positive");
  if (P.is_zero()) throw ZeroPolynomialError("root finding on the zero polynomial");
  if (P.degree() == 0) return {};

  double maxc = 0.0;
  for (const auto& c : P.c) maxc = std::max(maxc, std::abs(c));

  // structural zero roots come off exactly
  IntPoly work = P;
  int zero_mult = 0;
  while (work.degree() > 0 && std::abs(work.c.front()) <= 1e-14 * maxc) {
    work.c.erase(work.c.begin());
    ++zero_mult;
  }

  RootSet rs;
  if (work.degree() > 0) {
    IntPoly monic = work;
    const Complex lead = monic.leading();
    for (auto& c : monic.c) c /= lead;
    const std::vector<Complex> z = durand_kerner(monic);
    rs.roots = cluster_points(z, tol);

    // certification: the clustered roots must reproduce the monic input
    const IntPoly back = expand_monic(rs.roots);
    double maxm = 0.0, err = 0.0;
    for (const auto& c : monic.c) maxm = std::max(maxm, std::abs(c));
    for (std::size_t i = 0; i < monic.c.size(); ++i)
      err = std::max(err, std::abs(back.c[i] - monic.c[i]));
    if (err > tol * std::max(1.0, maxm))
      throw NonConvergenceError("root set fails to reproduce the polynomial (defect " +
                                std::to_string(err) + ")");
  }
  if (zero_mult > 0) rs.roots.push_back({Complex{}, zero_mult});
  std::sort(rs.roots.begin(), rs.roots.end(), [](const auto& a, const auto& b) {
    if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });
  return rs;
}

OrbitSet cluster_orbits(const RootSet& roots, std::int64_t q, double tol) {
  if (q < 1) throw DomainError("orbit clustering needs q >= 1");
  OrbitSet os;
  os.q = q;

  double rmax = 0.0;
  for (const auto& [v, m] : roots.roots) rmax = std::max(rmax, std::abs(v));

  std::vector<std::pair<Complex, int>> nonzero;
  int zeros = 0;
  for (const auto& [v, m] : roots.roots) {
    if (std::abs(v) <= tol * std::max(1.0, rmax))
      zeros += m;
    else
      nonzero.push_back({v, m});
  }
  if (zeros > 0) {
    Orbit z;
    z.representative = Complex{};
    z.mult.assign(static_cast<std::size_t>(q), 0);
    z.mult[0] = zeros;
    os.orbits.push_back(std::move(z));
  }

  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<bool> used(nonzero.size(), false);
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    if (used[i]) continue;
    // collect everything xi-related to root i
    std::vector<std::size_t> members{i};
    used[i] = true;
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      if (used[j]) continue;
      const Complex ratio = nonzero[j].first / nonzero[i].first;
      const long phase = std::lround(q * std::arg(ratio) / two_pi);
      const long jj = ((phase % q) + q) % q;
      const Complex xi_j = std::polar(1.0, two_pi * static_cast<double>(jj) / q);
      if (std::abs(nonzero[j].first - nonzero[i].first * xi_j) <=
          tol * std::max(1.0, std::abs(nonzero[i].first))) {
        members.push_back(j);
        used[j] = true;
      }
    }
    // representative: member with the smallest principal argument in [0, 2pi)
    std::size_t rep = members.front();
    double best_arg = INFINITY;
    for (const auto idx : members) {
      double a = std::arg(nonzero[idx].first);
      if (a < 0) a += two_pi;
      if (a < best_arg - 1e-15) {
        best_arg = a;
        rep = idx;
      }
    }
    Orbit orb;
    orb.representative = nonzero[rep].first;
    orb.mult.assign(static_cast<std::size_t>(q), 0);
    for (const auto idx : members) {
      const Complex ratio = nonzero[idx].first / orb.representative;
      const long phase = std::lround(q * std::arg(ratio) / two_pi);
      const long jj = ((phase % q) + q) % q;
      orb.mult[static_cast<std::size_t>(jj)] += nonzero[idx].second;
    }
    os.orbits.push_back(std::move(orb));
  }
  return os;
}

namespace {

// Continued-fraction convergents of v (denominator capped at 1e6) inside a
// loose window around v. Each one is only a candidate: exact division is the
// arbiter, so the window errs on the wide side — clusters of multiplicity 3+
// place the floating estimate as far as ~1e-4 from the true rational.
std::vector<BigRat> rational_candidates(double v) {
  using boost::multiprecision::cpp_int;
  std::vector<BigRat> out;
  const double window = 1e-2 * std::max(1.0, std::abs(v));
  double x = v;
  cpp_int h0 = 1, h1 = 0, k0 = 0, k1 = 1;  // h: numerators, k: denominators
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(x);
    if (std::abs(fl) > 9e15) break;
    const cpp_int a(static_cast<long long>(fl));
    const cpp_int h2 = a * h0 + h1, k2 = a * k0 + k1;
    if (k2 > 1000000) break;
    h1 = h0; h0 = h2;
    k1 = k0; k0 = k2;
    const double approx = h0.convert_to<double>() / k0.convert_to<double>();
    if (std::abs(approx - v) <= window) out.push_back(BigRat(h0, k0));
    if (std::abs(approx - v) <= 1e-12 * std::max(1.0, std::abs(v))) break;
    const double frac = x - fl;
    if (frac < 1e-12) break;
    x = 1.0 / frac;
  }
  return out;
}

}  // namespace

RationalRootSplit find_rational_roots(const IntPolyX& P) {
  if (P.is_zero()) throw ZeroPolynomialError("root finding on the zero polynomial");
  RationalRootSplit out;
  out.remainder = P;

  // exact zero roots
  int zero_mult = 0;
  while (out.remainder.degree() > 0 && out.remainder.c.front().is_zero()) {
    out.remainder.c.erase(out.remainder.c.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.push_back({BigRat(0), zero_mult});

  for (const auto& c : out.remainder.c)
    if (!c.is_real()) {
      out.complete = out.remainder.degree() == 0;
      return out;
    }

  if (out.remainder.degree() > 0) {
    // Candidates from a coarse floating root pass, verified by exact division.
    // The pass is deliberately loose: a multiplicity-m root is only located to
    // O(eps^(1/m)) by any floating method, so certification at a tight
    // tolerance would reject exactly the inputs this splitter must handle.
    IntPoly fl;
    for (const auto& c : out.remainder.c) fl.c.push_back(c.to_complex());
    RootSet rs;
    try {
      rs = find_roots(fl, 3e-3);
    } catch (const NonConvergenceError&) {
      rs = {};  // no candidates; report incomplete
    }
    std::vector<BigRat> seen;
    for (const auto& [v, m] : rs.roots) {
      if (std::abs(v.imag()) > 0.05 * (1.0 + std::abs(v))) continue;
      for (const auto& cand : rational_candidates(v.real())) {
        if (std::find(seen.begin(), seen.end(), cand) != seen.end()) continue;
        seen.push_back(cand);
        IntPolyX lin;
        lin.c = {RatComplex(-cand), RatComplex(1)};
        int mult = 0;
        while (out.remainder.degree() > 0) {
          auto [quot, rem] = divide(out.remainder, lin);
          if (!rem.is_zero()) break;
          out.remainder = quot;
          ++mult;
        }
        if (mult > 0) {
          out.roots.push_back({cand, mult});
          break;
        }
      }
    }
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.complete = out.remainder.degree() == 0;
  return out;
}

}  // namespace fracreduce
