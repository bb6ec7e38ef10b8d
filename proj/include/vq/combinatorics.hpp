#pragma once

/**
 * @file combinatorics.hpp
 * @brief Stirling numbers, elementary symmetric functions, Vandermonde
 * determinants and solves, discriminants, the residue-interpolation
 * coefficients p_l^(k) and the roots-of-unity floor formula.
 *
 * Everything except the roots-of-unity pieces is exact.
 */

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "vq/errors.hpp"
#include "vq/exact/dense_matrix.hpp"
#include "vq/exact/rational.hpp"

namespace vq {

/// Abscissae z_1 ... z_k.
using PointSet = std::vector<Rational>;

/**
 * Signed Stirling number S_k^(m) fixed by
 *   prod_{j=1}^{k-1} (x - j) = sum_{m=1}^{k} S_k^(m) x^(m-1).
 */
inline BigInt stirling_first(int k, int m) {
  if (k < 1) throw RangeError("stirling_first: k must be >= 1");
  if (m < 1 || m > k) throw RangeError("stirling_first: m must lie in 1..k");
  // poly[i] is the coefficient of x^i.
  std::vector<BigInt> poly{1};
  for (int j = 1; j <= k - 1; ++j) {
    std::vector<BigInt> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * j;
    }
    poly = std::move(next);
  }
  return poly[static_cast<std::size_t>(m - 1)];
}

/// Sum of all products of q distinct entries of `vars`; e_0 = 1.
inline Rational elementary_symmetric(std::span<const Rational> vars, int q) {
  if (q < 0 || static_cast<std::size_t>(q) > vars.size())
    throw RangeError("elementary_symmetric: degree out of range");
  // e[j] after processing a prefix of vars.
  std::vector<Rational> e(static_cast<std::size_t>(q) + 1);
  e[0] = 1;
  for (const auto& v : vars) {
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += e[j - 1] * v;
  }
  return e[static_cast<std::size_t>(q)];
}

/// Elementary symmetric function of `vars` with the entry at 1-based position `m` removed.
inline Rational esym_omit(std::span<const Rational> vars, std::size_t m, int q) {
  if (m < 1 || m > vars.size()) throw RangeError("esym_omit: position out of range");
  PointSet rest;
  rest.reserve(vars.size() - 1);
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (i + 1 != m) rest.push_back(vars[i]);
  return elementary_symmetric(rest, q);
}

/// prod_{i>j} (x_i - x_j).
inline Rational vandermonde_det(std::span<const Rational> xs) {
  Rational d = 1;
  for (std::size_t i = 1; i < xs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) d *= xs[i] - xs[j];
  return d;
}

/// prod_{i != j} (x_i - x_j).
inline Rational discriminant(std::span<const Rational> xs) {
  Rational d = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (i != j) d *= xs[i] - xs[j];
  return d;
}

/// Matrix with rows (1, x_i, x_i^2, ...).
inline RationalMatrix vandermonde_matrix(std::span<const Rational> xs) {
  const std::size_t n = xs.size();
  RationalMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      v(i, j) = p;
      p *= xs[i];
    }
  }
  return v;
}

/**
 * Solves V(xs) p = b, V with rows (1, x_i, x_i^2, ...), by Lagrange
 * interpolation: p holds the monomial coefficients of the polynomial through
 * (x_i, b_i). O(n^2) via synthetic division of the master polynomial.
 */
inline std::vector<Rational> vandermonde_solve(std::span<const Rational> xs, std::span<const Rational> b) {
  const std::size_t n = xs.size();
  if (b.size() != n) throw ConfigError("vandermonde_solve: |b| != |xs|");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (xs[i] == xs[j]) throw SingularError("vandermonde_solve: coincident abscissae");

  // master[i] = coefficient of x^i in prod_j (x - x_j).
  std::vector<Rational> master(n + 1);
  master[0] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 1; i >= 1; --i) master[i] = master[i - 1] - xs[j] * master[i];
    master[0] = -xs[j] * master[0];
  }

  std::vector<Rational> p(n);
  std::vector<Rational> basis(n);
  for (std::size_t m = 0; m < n; ++m) {
    if (sgn(b[m]) == 0) continue;
    // basis = master / (x - x_m), highest coefficient first.
    Rational carry = 0;
    for (std::size_t i = n; i >= 1; --i) {
      carry = master[i] + carry * xs[m];
      basis[i - 1] = carry;
    }
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != m) denom *= xs[m] - xs[j];
    const Rational scale = b[m] / denom;
    for (std::size_t i = 0; i < n; ++i) p[i] += basis[i] * scale;
  }
  return p;
}

/// Coefficients of the polynomial through (0,0), (1,1), ..., (k-1,1).
struct InterpolationCoeffs {
  int k = 0;
  /// coeffs[l] multiplies x^l; coeffs[0] = p_0 = 0.
  std::vector<Rational> coeffs;

  /// p_l^(k) for 1 <= l <= k-1.
  [[nodiscard]] const Rational& p(int l) const {
    if (l < 1 || l > k - 1) throw RangeError("InterpolationCoeffs::p: index out of range");
    return coeffs[static_cast<std::size_t>(l)];
  }

  [[nodiscard]] Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  }
};

/// The residue nodes z_r = r - 1, r = 1..k.
inline PointSet residue_nodes(int k) {
  PointSet z;
  for (int r = 0; r < k; ++r) z.emplace_back(r);
  return z;
}

/**
 * Closed-form p_l^(k) built from elementary symmetric functions of the nodes
 * with one node removed. The removed node for summation index m is z_m (value
 * m-1), i.e. the node whose Lagrange basis polynomial is being expanded.
 */
inline std::vector<Rational> interp_coeffs_closed_form(int k) {
  if (k < 2) throw RangeError("interp_coeffs: k must be >= 2");
  const PointSet z = residue_nodes(k);
  std::vector<Rational> coeffs(static_cast<std::size_t>(k));
  for (int l = 1; l <= k - 1; ++l) {
    Rational sum = 0;
    for (int m = 2; m <= k; ++m) {
      Rational denom = 1;
      for (int j = 1; j <= k; ++j)
        if (j != m) denom *= std::abs(j - m);
      Rational term = esym_omit(z, static_cast<std::size_t>(m), k - 1 - l) / denom;
      if ((l + 1 + m) % 2 != 0) term = -term;
      sum += term;
    }
    coeffs[static_cast<std::size_t>(l)] = sum;
  }
  return coeffs;
}

/// p_l^(k) by Vandermonde solve and by closed form; throws if they disagree.
inline InterpolationCoeffs interp_coeffs(int k) {
  if (k < 2) throw RangeError("interp_coeffs: k must be >= 2");
  const PointSet z = residue_nodes(k);
  std::vector<Rational> b(static_cast<std::size_t>(k), Rational(1));
  b[0] = 0;
  std::vector<Rational> solved = vandermonde_solve(z, b);
  const std::vector<Rational> closed = interp_coeffs_closed_form(k);
  if (solved != closed)
    throw ConsistencyError("interp_coeffs: closed form disagrees with Vandermonde solve at k=" +
                           std::to_string(k));
  return InterpolationCoeffs{k, std::move(solved)};
}

/// zeta_j = exp(2 pi i j / k) and C_j^(k), j = 1..k-1.
struct RootOfUnityCoeffs {
  int k = 0;
  std::vector<std::complex<double>> zeta;  // zeta[0] = 1
  std::vector<std::complex<double>> c;     // c[0] unused (0)

  [[nodiscard]] std::complex<double> C(int j) const {
    if (j < 1 || j > k - 1) throw RangeError("RootOfUnityCoeffs::C: index out of range");
    return c[static_cast<std::size_t>(j)];
  }
};

inline RootOfUnityCoeffs roots_of_unity_coeff(int k) {
  if (k < 2) throw RangeError("roots_of_unity_coeff: k must be >= 2");
  RootOfUnityCoeffs out;
  out.k = k;
  const auto n = static_cast<std::size_t>(k);
  out.zeta.resize(n);
  out.c.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    out.zeta[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / k);
  out.zeta[0] = 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    std::complex<double> prod = out.zeta[j] - 1.0;
    for (std::size_t l = 0; l < n; ++l)
      if (l != j) prod *= out.zeta[j] - out.zeta[l];
    out.c[j] = 1.0 / prod;
  }
  return out;
}

/// Value of (2n-k+1)/(2k) + sum_j C_j zeta_j^n before rounding.
inline std::complex<double> floor_formula_value(const RootOfUnityCoeffs& rc, long n) {
  const int k = rc.k;
  std::complex<double> value = static_cast<double>(2 * n - k + 1) / (2.0 * k);
  for (int j = 1; j < k; ++j) {
    // zeta_j^n from the reduced angle keeps large n accurate.
    const long r = ((static_cast<long>(j) * n) % k + k) % k;
    value += rc.C(j) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / k);
  }
  return value;
}

inline constexpr double kFloorFormulaTolerance = 1e-9;

/// floor(n/k) through the roots-of-unity formula, with the residual checked.
inline long floor_via_formula(long n, int k) {
  if (n < 0) throw RangeError("floor_via_formula: n must be >= 0");
  const RootOfUnityCoeffs rc = roots_of_unity_coeff(k);
  const std::complex<double> v = floor_formula_value(rc, n);
  const double rounded = std::round(v.real());
  if (std::abs(v.imag()) > kFloorFormulaTolerance || std::abs(v.real() - rounded) > kFloorFormulaTolerance)
    throw NumericalError("floor_via_formula: residual exceeds tolerance at n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
  return static_cast<long>(rounded);
}

/// Discriminant of the k-th roots of unity, evaluated numerically.
inline std::complex<double> roots_of_unity_discriminant(int k) {
  const RootOfUnityCoeffs rc = roots_of_unity_coeff(k);
  std::complex<double> d = 1.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) d *= rc.zeta[static_cast<std::size_t>(i)] - rc.zeta[static_cast<std::size_t>(j)];
  return d;
}

}  // namespace vq
