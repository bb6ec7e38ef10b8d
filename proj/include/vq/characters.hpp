#pragma once

/**
 * @file characters.hpp
 * @brief Minimal-model data for M(2, 2k+1), character q-series from the
 * product formula, and the Wronskians W_k, W_k' with their scaling factors.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vq/combinatorics.hpp"
#include "vq/errors.hpp"
#include "vq/exact/qseries.hpp"
#include "vq/exact/rational.hpp"

namespace vq {

struct MinimalModelData {
  int k = 2;
  Rational c;
  std::vector<Rational> h;  // h[i-1] = h_{i,k}
  std::vector<Rational> a;  // a[i-1] = h_{i,k} - c/24
};

inline MinimalModelData model_data(int k) {
  if (k < 2) throw RangeError("model_data: k must be >= 2");
  MinimalModelData d;
  d.k = k;
  d.c = rational(-2L * (k - 1) * (6L * k - 1), 2L * k + 1);
  for (int i = 1; i <= k; ++i) {
    d.h.push_back(rational(-1L * (2L * k - i) * (i - 1), 2L * (2L * k + 1)));
    d.a.push_back(d.h.back() - d.c / 24);
  }
  return d;
}

inline constexpr int kMaxCharacterOrder = 200;
inline constexpr int kDefaultCharacterOrder = 60;

/// q^{a_{i,k}} times an integer series; both factors are kept.
struct CharacterSeries {
  int i = 1;
  int k = 2;
  int order = 0;
  Rational lead;                  // a_{i,k}
  std::vector<BigInt> dims;       // dims[n], n = 0..order
  QSeries series;                 // q^lead * sum dims[n] q^n, known to lead + order
};

/// Whether part n is allowed in ch_{i,k}: n != 0, +-i (mod 2k+1).
inline bool character_part_allowed(int n, int i, int k) {
  const int modulus = 2 * k + 1;
  const int r = n % modulus;
  return r != 0 && r != i && r != modulus - i;
}

inline CharacterSeries character_series(int i, int k, int order = kDefaultCharacterOrder) {
  if (k < 2) throw RangeError("character_series: k must be >= 2");
  if (i < 1 || i > k) throw RangeError("character_series: i must lie in 1..k");
  if (order < 0 || order > kMaxCharacterOrder) throw RangeError("character_series: order must lie in 0..200");
  const auto len = static_cast<std::size_t>(order) + 1;
  // Multiply in each factor 1/(1 - q^n) in place.
  std::vector<BigInt> dims(len);
  dims[0] = 1;
  for (int n = 1; n <= order; ++n) {
    if (!character_part_allowed(n, i, k)) continue;
    for (std::size_t e = static_cast<std::size_t>(n); e < len; ++e) dims[e] += dims[e - static_cast<std::size_t>(n)];
  }
  CharacterSeries out;
  out.i = i;
  out.k = k;
  out.order = order;
  out.lead = model_data(k).a[static_cast<std::size_t>(i - 1)];
  std::vector<Rational> coeffs(dims.begin(), dims.end());
  out.series = QSeries::from_coefficients(out.lead, coeffs, Rational(out.lead + order));
  out.dims = std::move(dims);
  return out;
}

struct WronskianResult {
  int k = 2;
  QSeries det_w;        // det W_k
  QSeries det_w_prime;  // det W_k'
  Rational alpha;
  Rational beta;
  QSeries w;            // alpha * det W_k
  QSeries w_prime;      // beta * det W_k'
};

inline Rational wronskian_alpha(const MinimalModelData& d) {
  Rational prod = 1;
  for (std::size_t i = 0; i < d.a.size(); ++i)
    for (std::size_t j = i + 1; j < d.a.size(); ++j) {
      if (d.a[j] == d.a[i]) throw SingularError("wronskian: repeated a_{i,k}");
      prod *= d.a[j] - d.a[i];
    }
  return 1 / prod;
}

inline Rational wronskian_beta(const MinimalModelData& d, const Rational& alpha) {
  Rational prod = 1;
  for (const auto& a : d.a) {
    if (sgn(a) == 0) return 0;
    prod *= a;
  }
  return alpha / prod;
}

/// Rows ch^(first) .. ch^(first+k-1) of the characters.
inline SeriesMatrix wronskian_matrix(const std::vector<CharacterSeries>& chars, int first) {
  const std::size_t k = chars.size();
  SeriesMatrix m(k, std::vector<QSeries>(k));
  for (std::size_t col = 0; col < k; ++col) {
    QSeries s = chars[col].series;
    for (int r = 0; r < first; ++r) s = s.qderiv();
    for (std::size_t row = 0; row < k; ++row) {
      m[row][col] = s;
      s = s.qderiv();
    }
  }
  return m;
}

inline constexpr int kMaxWronskianK = 5;

inline WronskianResult wronskian(int k, int order = kDefaultCharacterOrder) {
  if (k < 2 || k > kMaxWronskianK) throw RangeError("wronskian: k must lie in 2..5");
  if (order < 0 || order + k > kMaxCharacterOrder) throw RangeError("wronskian: order out of range");
  const MinimalModelData d = model_data(k);
  // k extra orders of headroom beyond the requested truncation.
  std::vector<CharacterSeries> chars;
  for (int i = 1; i <= k; ++i) chars.push_back(character_series(i, k, order + k));
  WronskianResult out;
  out.k = k;
  out.det_w = series_det(wronskian_matrix(chars, 0));
  out.det_w_prime = series_det(wronskian_matrix(chars, 1));
  out.alpha = wronskian_alpha(d);
  out.beta = wronskian_beta(d, out.alpha);
  out.w = out.alpha * out.det_w;
  out.w_prime = out.beta * out.det_w_prime;
  return out;
}

/// w_k two ways, plus the relation to alpha.
struct LeadingCoeffCheck {
  int k = 2;
  Rational from_determinant;  // leading coefficient of det W_k
  Rational from_vandermonde;  // prod_{i<j} (a_j - a_i)
  Rational alpha_inverse;
  Rational lead_exponent;     // exponent of the leading term of det W_k
  Rational expected_exponent; // sum_i a_{i,k}
  bool truncation_safe = false;

  [[nodiscard]] bool passed() const {
    return truncation_safe && from_determinant == from_vandermonde && from_vandermonde == alpha_inverse &&
           lead_exponent == expected_exponent && sgn(from_determinant) != 0;
  }
};

inline LeadingCoeffCheck leading_coeff_check(int k, int order = kDefaultCharacterOrder) {
  const WronskianResult wr = wronskian(k, order);
  const MinimalModelData d = model_data(k);
  LeadingCoeffCheck out;
  out.k = k;
  out.from_vandermonde = vandermonde_det(d.a);
  out.alpha_inverse = 1 / wr.alpha;
  for (const auto& a : d.a) out.expected_exponent += a;
  const std::optional<Rational> v = wr.det_w.valuation();
  if (v) {
    out.from_determinant = wr.det_w.leading_coefficient();
    out.lead_exponent = *v;
    out.truncation_safe = !wr.det_w.truncation() || *v <= *wr.det_w.truncation();
  }
  return out;
}

}  // namespace vq
