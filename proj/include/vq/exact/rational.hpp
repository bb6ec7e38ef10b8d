#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and rationals.
 *
 * Backed by GMP's C++ interface. mpq_class keeps values canonical (lowest
 * terms, positive denominator) after every arithmetic operation; the only
 * place a non-canonical value can appear is direct construction from a
 * numerator/denominator pair, which `rational()` below always reduces.
 *
 * GaussianRational is the exact complex counterpart, used wherever a
 * realization carries a factor of i but must still be checked without
 * rounding.
 */

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace vq {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational r{BigInt(num), BigInt(den)};
  r.canonicalize();
  return r;
}

inline Rational rational(const BigInt& num, const BigInt& den = 1) {
  Rational r{num, den};
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational ipow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

inline BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline BigInt from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1U
                                 : static_cast<unsigned __int128>(v);
  const auto hi = static_cast<std::uint64_t>(u >> 64U);
  const auto lo = static_cast<std::uint64_t>(u);
  BigInt z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(hi), 0, 0, &hi);
  z <<= 64;
  BigInt low;
  mpz_import(low.get_mpz_t(), 1, 1, sizeof(lo), 0, 0, &lo);
  z += low;
  return negative ? BigInt(-z) : z;
}

/// Exact complex number with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(implicit)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}  // NOLINT(implicit)

  static GaussianRational i() { return {0, 1}; }

  [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  [[nodiscard]] GaussianRational conj() const { return {re, -im}; }
  [[nodiscard]] Rational norm2() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    const Rational d = o.norm2();
    Rational r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline std::string to_string(const GaussianRational& z) {
  if (sgn(z.im) == 0) return z.re.get_str();
  return z.re.get_str() + (sgn(z.im) < 0 ? "-" : "+") + Rational(abs(z.im)).get_str() + "i";
}

inline double magnitude(const GaussianRational& z) {
  const double r = z.re.get_d();
  const double i = z.im.get_d();
  return std::hypot(r, i);
}

}  // namespace vq
