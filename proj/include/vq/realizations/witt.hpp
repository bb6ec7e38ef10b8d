#pragma once

/**
 * @file witt.hpp
 * @brief The Witt generators L_n = -z^{n+1} d/dz acting on Laurent polynomials.
 */

#include <map>
#include <string>

#include "vq/errors.hpp"
#include "vq/exact/rational.hpp"

namespace vq {

/// Finite Laurent polynomial with rational coefficients; zero terms are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(int exponent, const Rational& coeff = 1) {
    LaurentPolynomial p;
    p.add(exponent, coeff);
    return p;
  }

  void add(int exponent, const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  [[nodiscard]] const std::map<int, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] Rational coefficient(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const Rational& s, const LaurentPolynomial& p) {
    LaurentPolynomial out;
    for (const auto& [e, c] : p.terms_) out.add(e, s * c);
    return out;
  }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.get_str() + ")z^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::map<int, Rational> terms_;
};

// Wide enough for L_{m+n} with |m|, |n| <= 6.
inline constexpr int kMaxWittIndex = 12;

/// L_n: z^m -> -m z^{m+n}.
class WittGenerator {
 public:
  explicit WittGenerator(int n) : n_(n) {
    if (n < -kMaxWittIndex || n > kMaxWittIndex) throw RangeError("witt_gen: |n| must be <= 12");
  }

  [[nodiscard]] int index() const { return n_; }

  [[nodiscard]] LaurentPolynomial operator()(const LaurentPolynomial& p) const {
    LaurentPolynomial out;
    for (const auto& [m, c] : p.terms()) out.add(m + n_, -m * c);
    return out;
  }

 private:
  int n_;
};

inline WittGenerator witt_gen(int n) { return WittGenerator(n); }

/// ([L_m, L_n] - (m - n) L_{m+n}) applied to p; zero when the relation holds.
inline LaurentPolynomial witt_relation_residual(int m, int n, const LaurentPolynomial& p) {
  const WittGenerator lm(m);
  const WittGenerator ln(n);
  const WittGenerator lmn(m + n);
  return lm(ln(p)) - ln(lm(p)) - Rational(m - n) * lmn(p);
}

}  // namespace vq
