#pragma once

/**
 * @file qseries.hpp
 * @brief Truncated formal series in q with rational exponents.
 *
 * A QSeries stores finitely many terms c * q^(e/D) with a single exponent
 * denominator D, together with a truncation order T: the series is known
 * exactly for every exponent <= T and nothing is claimed beyond it. A series
 * without a truncation order is exact (a finite Laurent-Puiseux polynomial).
 *
 * Truncation orders only ever shrink. The product of a (known to T_a, lowest
 * exponent v_a) and b (T_b, v_b) is known to min(T_a + v_b, T_b + v_a).
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "vq/errors.hpp"
#include "vq/exact/rational.hpp"

namespace vq {

class QSeries {
 public:
  /// The exact zero series.
  QSeries() = default;

  /// Zero, known up to (and including) exponent `truncation`.
  explicit QSeries(Rational truncation) : trunc_(std::move(truncation)) {}

  static QSeries constant(const Rational& c, std::optional<Rational> truncation = std::nullopt) {
    return monomial(c, Rational(0), std::move(truncation));
  }

  static QSeries monomial(const Rational& coeff, const Rational& exponent,
                          std::optional<Rational> truncation = std::nullopt) {
    QSeries s;
    s.trunc_ = std::move(truncation);
    s.add_term(exponent, coeff);
    s.normalize();
    return s;
  }

  /// q^lead * sum_n coeffs[n] q^n, known up to `truncation`.
  static QSeries from_coefficients(const Rational& lead, const std::vector<Rational>& coeffs,
                                   std::optional<Rational> truncation = std::nullopt) {
    QSeries s;
    s.trunc_ = std::move(truncation);
    for (std::size_t n = 0; n < coeffs.size(); ++n) s.add_term(lead + static_cast<long>(n), coeffs[n]);
    s.normalize();
    return s;
  }

  [[nodiscard]] const std::optional<Rational>& truncation() const { return trunc_; }
  [[nodiscard]] bool is_exact() const { return !trunc_.has_value(); }
  [[nodiscard]] std::int64_t exponent_denominator() const { return den_; }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// (exponent, coefficient) pairs in ascending exponent order.
  [[nodiscard]] std::vector<std::pair<Rational, Rational>> terms() const {
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [num, c] : terms_) out.emplace_back(exponent_of(num), c);
    return out;
  }

  [[nodiscard]] Rational coefficient(const Rational& exponent) const {
    if (trunc_ && exponent > *trunc_) throw RangeError("coefficient requested beyond truncation order");
    const Rational scaled = exponent * den_;
    if (scaled.get_den() != 1) return 0;
    const auto it = terms_.find(scaled.get_num().get_si());
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Lowest exponent carrying a non-zero coefficient.
  [[nodiscard]] std::optional<Rational> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return exponent_of(terms_.begin()->first);
  }

  [[nodiscard]] Rational leading_coefficient() const {
    if (terms_.empty()) throw RangeError("leading coefficient of a zero series");
    return terms_.begin()->second;
  }

  /// Prime derivation: c q^e -> (c e) q^e.
  [[nodiscard]] QSeries qderiv() const {
    QSeries out;
    out.trunc_ = trunc_;
    out.den_ = den_;
    for (const auto& [num, c] : terms_) {
      Rational v = c * rational(num, den_);
      if (sgn(v) != 0) out.terms_.emplace(num, std::move(v));
    }
    out.normalize();
    return out;
  }

  /// Drop everything above `order`; never extends precision.
  [[nodiscard]] QSeries truncated(const Rational& order) const {
    QSeries out = *this;
    if (!out.trunc_ || order < *out.trunc_) out.trunc_ = order;
    out.drop_above_truncation();
    out.normalize();
    return out;
  }

  QSeries& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      den_ = 1;
      return *this;
    }
    for (auto& [num, c] : terms_) c *= s;
    return *this;
  }

  friend QSeries operator*(QSeries a, const Rational& s) { return a *= s; }
  friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }
  friend QSeries operator-(QSeries a) { return a *= Rational(-1); }

  friend QSeries operator+(const QSeries& a, const QSeries& b) { return combine(a, b, false); }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return combine(a, b, true); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries out;
    out.trunc_ = product_truncation(a, b);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    const std::int64_t den = std::lcm(a.den_, b.den_);
    const std::int64_t sa = den / a.den_;
    const std::int64_t sb = den / b.den_;
    out.den_ = den;
    std::optional<std::int64_t> limit;
    if (out.trunc_) limit = floor_scaled(*out.trunc_, den);
    for (const auto& [ea, ca] : a.terms_) {
      const std::int64_t base = checked_mul(ea, sa);
      for (const auto& [eb, cb] : b.terms_) {
        const std::int64_t e = base + checked_mul(eb, sb);
        // b's exponents ascend, so later terms only exceed the limit further.
        if (limit && e > *limit) break;
        out.terms_[e] += ca * cb;
      }
    }
    out.prune_zeros();
    out.normalize();
    return out;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.trunc_ == b.trunc_ && a.den_ == b.den_ && a.terms_ == b.terms_;
  }

  /// CSV: exponent_num,exponent_den,coeff_num,coeff_den; one term per line, ascending.
  void write_csv(std::ostream& os) const {
    os << "exponent_num,exponent_den,coeff_num,coeff_den\n";
    for (const auto& [num, c] : terms_) {
      const Rational e = rational(num, den_);
      os << e.get_num().get_str() << ',' << e.get_den().get_str() << ',' << c.get_num().get_str() << ','
         << c.get_den().get_str() << '\n';
    }
  }

 private:
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw SizeError("exponent numerator overflow");
    return r;
  }

  static std::int64_t floor_scaled(const Rational& x, std::int64_t den) {
    BigInt q;
    const Rational scaled = x * den;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    if (!q.fits_slong_p()) throw SizeError("truncation order out of range");
    return q.get_si();
  }

  [[nodiscard]] Rational exponent_of(std::int64_t num) const { return rational(num, den_); }

  // Lowest exponent that can carry a non-zero term: the valuation, or the
  // truncation order of a series that is zero as far as it is known.
  [[nodiscard]] std::optional<Rational> lower_bound() const {
    if (!terms_.empty()) return exponent_of(terms_.begin()->first);
    return trunc_;
  }

  static std::optional<Rational> product_truncation(const QSeries& a, const QSeries& b) {
    // Either factor exactly zero: the product is exactly zero.
    if ((a.is_exact() && a.terms_.empty()) || (b.is_exact() && b.terms_.empty())) return std::nullopt;
    std::optional<Rational> t;
    auto consider = [&t](const Rational& candidate) {
      if (!t || candidate < *t) t = candidate;
    };
    if (a.trunc_) consider(*a.trunc_ + *b.lower_bound());
    if (b.trunc_) consider(*b.trunc_ + *a.lower_bound());
    return t;
  }

  static QSeries combine(const QSeries& a, const QSeries& b, bool subtract) {
    QSeries out;
    if (a.trunc_ && b.trunc_) {
      out.trunc_ = std::min(*a.trunc_, *b.trunc_);
    } else if (a.trunc_) {
      out.trunc_ = a.trunc_;
    } else {
      out.trunc_ = b.trunc_;
    }
    const std::int64_t den = std::lcm(a.den_, b.den_);
    out.den_ = den;
    for (const auto& [e, c] : a.terms_) out.terms_[checked_mul(e, den / a.den_)] += c;
    for (const auto& [e, c] : b.terms_) {
      auto& slot = out.terms_[checked_mul(e, den / b.den_)];
      if (subtract) {
        slot -= c;
      } else {
        slot += c;
      }
    }
    out.drop_above_truncation();
    out.prune_zeros();
    out.normalize();
    return out;
  }

  void add_term(const Rational& exponent, const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    if (trunc_ && exponent > *trunc_) return;
    const BigInt& d = exponent.get_den();
    if (!d.fits_slong_p()) throw SizeError("exponent denominator out of range");
    const std::int64_t new_den = std::lcm(den_, d.get_si());
    if (new_den != den_) rescale(new_den);
    const Rational scaled = exponent * den_;
    if (!scaled.get_num().fits_slong_p()) throw SizeError("exponent numerator out of range");
    terms_[scaled.get_num().get_si()] += coeff;
    prune_zeros();
  }

  void rescale(std::int64_t new_den) {
    const std::int64_t factor = new_den / den_;
    std::map<std::int64_t, Rational> scaled;
    for (auto& [e, c] : terms_) scaled.emplace(checked_mul(e, factor), std::move(c));
    terms_ = std::move(scaled);
    den_ = new_den;
  }

  void drop_above_truncation() {
    if (!trunc_) return;
    const std::int64_t limit = floor_scaled(*trunc_, den_);
    terms_.erase(terms_.upper_bound(limit), terms_.end());
  }

  void prune_zeros() {
    std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
  }

  // Restore the invariant that den_ is the least common denominator of the
  // stored exponents.
  void normalize() {
    std::int64_t g = den_;
    for (const auto& [e, c] : terms_) {
      g = std::gcd(g, e < 0 ? -e : e);
      if (g == 1) return;
    }
    if (terms_.empty()) {
      den_ = 1;
      return;
    }
    if (g <= 1) return;
    std::map<std::int64_t, Rational> reduced;
    for (auto& [e, c] : terms_) reduced.emplace(e / g, std::move(c));
    terms_ = std::move(reduced);
    den_ /= g;
  }

  std::int64_t den_ = 1;
  std::map<std::int64_t, Rational> terms_;
  std::optional<Rational> trunc_;
};

inline QSeries qseries_mul(const QSeries& a, const QSeries& b) { return a * b; }

/// Equality of everything both series know: compare after truncating to the lower order.
inline bool agree_to_shared_order(const QSeries& a, const QSeries& b) {
  const auto& ta = a.truncation();
  const auto& tb = b.truncation();
  if (!ta && !tb) return a == b;
  const Rational t = !ta ? *tb : (!tb ? *ta : std::min(*ta, *tb));
  return a.truncated(t) == b.truncated(t);
}
inline QSeries qseries_qderiv(const QSeries& a) { return a.qderiv(); }

/// Square matrix of series, row-major.
using SeriesMatrix = std::vector<std::vector<QSeries>>;

inline constexpr std::size_t kMaxSeriesDeterminant = 8;

/**
 * Determinant over the series ring by Laplace expansion along rows, memoized
 * over the subset of columns already used. No divisions, so every truncation
 * order is propagated through products and sums alone.
 */
inline QSeries series_det(const SeriesMatrix& m) {
  const std::size_t n = m.size();
  if (n > kMaxSeriesDeterminant) throw SizeError("series determinant limited to 8x8");
  for (const auto& row : m)
    if (row.size() != n) throw ConfigError("series determinant requires a square matrix");
  if (n == 0) return QSeries::constant(1);

  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::optional<QSeries>> minors(subsets);
  minors[0] = QSeries::constant(1);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    if (!minors[mask]) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      // Sign from the number of used columns to the right of `col`.
      const int larger = __builtin_popcountll(mask >> (col + 1));
      QSeries term = *minors[mask] * m[row][col];
      if (larger % 2 != 0) term = -term;
      auto& slot = minors[mask | (std::size_t{1} << col)];
      slot = slot ? *slot + term : term;
    }
  }
  return *minors[subsets - 1];
}

}  // namespace vq
