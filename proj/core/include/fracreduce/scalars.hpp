#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <string>

#include "fracreduce/rational.hpp"

namespace fracreduce {

using Complex = std::complex<double>;
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigRat& r) { return r.convert_to<double>(); }

inline BigRat bigrat_from(const Rational& r) {
  return BigRat(boost::multiprecision::cpp_int(r.num), boost::multiprecision::cpp_int(r.den));
}

// Gaussian rational: exact complex number with big-rational parts. This is the
// coefficient field of the exact pipeline; products of the worked-example
// constants overflow any fixed-width integer, hence the big backing type.
struct RatComplex {
  BigRat re = 0;
  BigRat im = 0;

  RatComplex() = default;
  RatComplex(BigRat r) : re(std::move(r)) {}  // NOLINT: implicit by design
  RatComplex(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
  RatComplex(std::int64_t n) : re(n) {}  // NOLINT: implicit by design
  explicit RatComplex(const Rational& r) : re(bigrat_from(r)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  Complex to_complex() const { return {to_double(re), to_double(im)}; }

  friend RatComplex operator+(const RatComplex& a, const RatComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend RatComplex operator-(const RatComplex& a, const RatComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend RatComplex operator-(const RatComplex& a) { return {-a.re, -a.im}; }
  friend RatComplex operator*(const RatComplex& a, const RatComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RatComplex operator/(const RatComplex& a, const RatComplex& b) {
    const BigRat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw OverflowError("division by exact zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const RatComplex& a, const RatComplex& b) { return a.re == b.re && a.im == b.im; }
};

// The polynomial layer is templated on the coefficient scalar; these traits
// supply the few operations whose meaning differs between the exact and the
// floating instantiation.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static bool negligible(const Complex& c, double scale) {
    return std::abs(c) <= 1e-12 * scale;
  }
  static double magnitude(const Complex& c) { return std::abs(c); }
  static Complex to_complex(const Complex& c) { return c; }
  static Complex from_int(std::int64_t v) { return {static_cast<double>(v), 0.0}; }
};

template <>
struct ScalarTraits<RatComplex> {
  static constexpr bool exact = true;
  static bool negligible(const RatComplex& c, double) { return c.is_zero(); }
  static double magnitude(const RatComplex& c) { return std::abs(c.to_complex()); }
  static Complex to_complex(const RatComplex& c) { return c.to_complex(); }
  static RatComplex from_int(std::int64_t v) { return RatComplex(v); }
};

}  // namespace fracreduce
