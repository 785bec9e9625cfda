#include "fracreduce/special.hpp"

#include <cmath>

#include "fracreduce/errors.hpp"

namespace fracreduce {

namespace {

// Lanczos approximation, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_positive(double x) {
  // valid for x >= 0.5; series evaluated at x-1
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  // fuse t^{z+1/2} e^{-t} in log space: the split form overflows near x = 170
  return std::sqrt(2.0 * M_PI) * std::exp((z + 0.5) * std::log(t) - t) * a;
}

}  // namespace

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw PoleError("gamma of a non-finite argument");
  if (x <= 0.0 && x == std::floor(x))
    throw PoleError("gamma pole at " + std::to_string(static_cast<long long>(x)));
  if (x < 0.5) return M_PI / (std::sin(M_PI * x) * lanczos_positive(1.0 - x));
  return lanczos_positive(x);
}

namespace {

// Shared series driver: first term t0, term ratio supplied per step. Stops
// once |term| < 1e-16 |partial| holds for 3 consecutive terms; guards against
// leaving the numerically representable range instead of returning garbage.
template <class Ratio>
Complex converge_series(Complex t0, Ratio ratio) {
  Complex sum = t0, term = t0;
  int quiet = 0;
  for (int k = 0; k < 200000; ++k) {
    term *= ratio(k);
    sum += term;
    const double m = std::abs(term);
    if (!std::isfinite(m) || m > 1e290)
      throw DomainError("series left the representable range before converging");
    if (m < 1e-16 * std::abs(sum)) {
      if (++quiet == 3) return sum;
    } else {
      quiet = 0;
    }
  }
  throw DomainError("series failed to converge within the iteration budget");
}

void check_ml_domain(double alpha, Complex z) {
  const double bound = alpha >= 0.25 ? 50.0 : 5.0;
  if (std::abs(z) > bound)
    throw DomainError("|z| = " + std::to_string(std::abs(z)) +
                      " outside the series-safe region (bound " + std::to_string(bound) + ")");
}

}  // namespace

Complex mittag_leffler(double alpha, double beta, Complex z) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("Mittag-Leffler needs alpha, beta > 0");
  check_ml_domain(alpha, z);
  // sum_k z^k / Gamma(alpha k + beta); ratio needs both Gamma values, so keep
  // the denominators explicit rather than a closed ratio. Extended-precision
  // accumulators keep the rounded result at one ulp for the common arguments.
  std::complex<long double> sum{0.0L, 0.0L}, zpow{1.0L, 0.0L};
  const std::complex<long double> zl{z.real(), z.imag()};
  int quiet = 0;
  for (int k = 0; k < 200000; ++k) {
    const double g = alpha * k + beta;
    // Gamma overflows to +inf for g > ~171; the term is then exactly 0
    const double denom = g > 171.0 ? INFINITY : gamma_fn(g);
    const std::complex<long double> term = zpow / static_cast<long double>(denom);
    sum += term;
    const double m = static_cast<double>(std::abs(term));
    if (!std::isfinite(m) || m > 1e290)
      throw DomainError("series left the representable range before converging");
    if (k > 0 && m < 1e-16 * static_cast<double>(std::abs(sum))) {
      if (++quiet == 3)
        return Complex{static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
    } else {
      quiet = 0;
    }
    zpow *= zl;
    if (!std::isfinite(static_cast<double>(std::abs(zpow))))
      throw DomainError("series left the representable range before converging");
  }
  throw DomainError("series failed to converge within the iteration budget");
}

Complex frac_integral_exp_closed(const Rational& alpha, Complex lambda, double t) {
  if (alpha < Rational(0)) throw OrderOutOfRangeError("negative integration order");
  return frac_integral_polyexp_closed(alpha, 0, lambda, t);
}

Complex frac_integral_polyexp_closed(const Rational& rho, int j, Complex lambda, double t) {
  if (rho < Rational(0)) throw OrderOutOfRangeError("negative integration order");
  if (j < 0) throw OrderOutOfRangeError("negative polynomial degree");
  if (t < 0.0) throw DomainError("closed-form integral needs t >= 0");
  const double r = rho.to_double();
  const Complex z = lambda * t;
  check_ml_domain(1.0, z);
  if (t == 0.0) return (r + j == 0) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  // t^{rho+j} sum_k z^k (k+j)! / (k! Gamma(k+j+1+rho))
  double fact_j = 1.0;
  for (int i = 2; i <= j; ++i) fact_j *= i;
  const Complex t0 = Complex{fact_j / gamma_fn(j + 1.0 + r), 0.0};
  const Complex s = converge_series(t0, [&](int k) {
    return z * (static_cast<double>(k + j + 1) / ((k + 1.0) * (k + j + 1.0 + r)));
  });
  return std::pow(t, r + j) * s;
}

}  // namespace fracreduce
