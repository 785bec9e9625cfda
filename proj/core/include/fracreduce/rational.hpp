#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <string>

#include "fracreduce/errors.hpp"

namespace fracreduce {

namespace detail {

inline std::int64_t checked_i64(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError(std::string("64-bit overflow in ") + what);
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

// Exact rational on 64-bit parts, used for exponents and integration orders.
// Invariants: lowest terms, den > 0. Arithmetic goes through 128-bit
// intermediates and throws OverflowError instead of wrapping.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw OverflowError("rational with zero denominator");
    if (den < 0) {
      num = detail::checked_i64(-static_cast<__int128>(num), "rational sign");
      den = detail::checked_i64(-static_cast<__int128>(den), "rational sign");
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t g = std::gcd(a.den, b.den);
    const __int128 n = static_cast<__int128>(a.num) * (b.den / g) +
                       static_cast<__int128>(b.num) * (a.den / g);
    const __int128 d = static_cast<__int128>(a.den) * (b.den / g);
    return Rational(detail::checked_i64(n, "rational add"), detail::checked_i64(d, "rational add"));
  }
  friend Rational operator-(const Rational& a) {
    return Rational(detail::checked_i64(-static_cast<__int128>(a.num), "rational negate"), a.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const std::int64_t g1 = std::gcd(a.num, b.den);
    const std::int64_t g2 = std::gcd(b.num, a.den);
    const __int128 n = static_cast<__int128>(a.num / g1) * (b.num / g2);
    const __int128 d = static_cast<__int128>(a.den / g2) * (b.den / g1);
    return Rational(detail::checked_i64(n, "rational mul"), detail::checked_i64(d, "rational mul"));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw OverflowError("rational division by zero");
    return a * Rational(b.den, b.num);
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 l = static_cast<__int128>(a.num) * b.den;
    const __int128 r = static_cast<__int128>(b.num) * a.den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

inline std::int64_t lcm_i64(std::int64_t a, std::int64_t b) {
  return detail::checked_i64(static_cast<__int128>(a) / std::gcd(a, b) * b, "lcm");
}

inline std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace fracreduce
