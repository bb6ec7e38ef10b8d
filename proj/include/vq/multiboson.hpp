#pragma once

/**
 * @file multiboson.hpp
 * @brief k-boson ladder operators on a truncated Fock space, qukit
 * codewords, the generalized bit flip X^(k) and the composition law of the
 * k-boson functor.
 *
 * All operators are dense complex matrices in the number basis |0>..|n_max>.
 * Shifting operators lose their top rows to truncation, so identities are
 * only checked on the guard-banded block n <= n_max - guard.
 *
 * Ladder normalization: A_k^dag |n> = sqrt(floor(n/k) + 1) |n+k>, i.e. the
 * k-boson operators act as ordinary bosons on each residue tower
 * {|k l + j>}_l. This is what makes the codewords below the coherent states
 * of A_k^dag with coefficients beta^l / sqrt(l!).
 */

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "vq/combinatorics.hpp"
#include "vq/errors.hpp"
#include "vq/exact/rational.hpp"

namespace vq {

using Complex = std::complex<double>;

struct FockSpace {
  int n_max = 0;
  int guard = 0;

  FockSpace(int cutoff, int guard_band) : n_max(cutoff), guard(guard_band) {
    if (cutoff < 0 || guard_band < 0 || guard_band > cutoff)
      throw ConfigError("FockSpace requires n_max >= guard >= 0");
  }

  /// Default guard band 2k for k-shifting operators.
  static FockSpace for_k(int n_max, int k) { return {n_max, 2 * k}; }

  [[nodiscard]] int dim() const { return n_max + 1; }
  /// Largest number state inside the validated block.
  [[nodiscard]] int validated_max() const { return n_max - guard; }

  friend bool operator==(const FockSpace&, const FockSpace&) = default;
};

class FockOperator {
 public:
  FockOperator(FockSpace space, Eigen::MatrixXcd m) : space_(space), m_(std::move(m)) {
    if (m_.rows() != space_.dim() || m_.cols() != space_.dim())
      throw ConfigError("FockOperator matrix does not match the space dimension");
    if (!m_.allFinite()) throw NumericalError("FockOperator entries must be finite");
  }

  static FockOperator zero(FockSpace s) { return {s, Eigen::MatrixXcd::Zero(s.dim(), s.dim())}; }
  static FockOperator identity(FockSpace s) { return {s, Eigen::MatrixXcd::Identity(s.dim(), s.dim())}; }

  static FockOperator diagonal(FockSpace s, const std::vector<double>& d) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(s.dim(), s.dim());
    for (int n = 0; n < s.dim(); ++n) m(n, n) = d[static_cast<std::size_t>(n)];
    return {s, std::move(m)};
  }

  [[nodiscard]] const FockSpace& space() const { return space_; }
  [[nodiscard]] const Eigen::MatrixXcd& matrix() const { return m_; }
  [[nodiscard]] Complex operator()(int row, int col) const { return m_(row, col); }

  [[nodiscard]] FockOperator adjoint() const { return {space_, m_.adjoint()}; }

  friend FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    a.require_same_space(b);
    return {a.space_, a.m_ * b.m_};
  }
  friend FockOperator operator+(const FockOperator& a, const FockOperator& b) {
    a.require_same_space(b);
    return {a.space_, a.m_ + b.m_};
  }
  friend FockOperator operator-(const FockOperator& a, const FockOperator& b) {
    a.require_same_space(b);
    return {a.space_, a.m_ - b.m_};
  }
  friend FockOperator operator*(Complex s, const FockOperator& a) { return {a.space_, s * a.m_}; }

  /// Largest |entry| of (this - other) over columns n <= validated_max and all rows.
  [[nodiscard]] double guarded_distance(const FockOperator& other) const {
    require_same_space(other);
    const int cols = space_.validated_max() + 1;
    return (m_ - other.m_).leftCols(cols).cwiseAbs().maxCoeff();
  }

  /// Sparse CSV dump: row,col,re,im for entries with |x| > 0.
  void write_csv(std::ostream& os) const {
    os << "row,col,re,im\n";
    for (int r = 0; r < m_.rows(); ++r)
      for (int c = 0; c < m_.cols(); ++c)
        if (m_(r, c) != Complex{}) os << r << ',' << c << ',' << m_(r, c).real() << ',' << m_(r, c).imag() << '\n';
  }

 private:
  void require_same_space(const FockOperator& o) const {
    if (!(space_ == o.space_)) throw ConfigError("operators live on different Fock spaces");
  }

  FockSpace space_;
  Eigen::MatrixXcd m_;
};

class FockVector {
 public:
  FockVector(FockSpace space, Eigen::VectorXcd amps) : space_(space), amps_(std::move(amps)) {
    if (amps_.size() != space_.dim()) throw ConfigError("FockVector length does not match the space dimension");
  }

  [[nodiscard]] const FockSpace& space() const { return space_; }
  [[nodiscard]] const Eigen::VectorXcd& amplitudes() const { return amps_; }
  [[nodiscard]] Complex operator[](int n) const { return amps_(n); }
  [[nodiscard]] double norm() const { return amps_.norm(); }

  /// Probability mass dropped by truncation before renormalization.
  [[nodiscard]] double truncation_weight() const { return truncation_weight_; }
  [[nodiscard]] bool truncation_warning() const { return truncation_weight_ > kTruncationWarning; }

  [[nodiscard]] Complex inner(const FockVector& other) const { return amps_.dot(other.amps_); }

  friend FockVector operator*(const FockOperator& op, const FockVector& v) {
    if (!(op.space() == v.space_)) throw ConfigError("operator and vector live on different Fock spaces");
    return {v.space_, op.matrix() * v.amps_};
  }

  static constexpr double kTruncationWarning = 1e-6;

 private:
  friend FockVector codeword_impl(const FockSpace&, int, int, Complex);

  FockSpace space_;
  Eigen::VectorXcd amps_;
  double truncation_weight_ = 0.0;
};

/// A_k, A_k^dag, N_k and D_k on a common space.
struct LadderOps {
  int k = 1;
  FockOperator lower;
  FockOperator raise;
  FockOperator number;   // N_k: floor(n/k)
  FockOperator residue;  // D_k: n mod k
};

inline FockOperator annihilation(const FockSpace& s) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(s.dim(), s.dim());
  for (int n = 1; n <= s.n_max; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {s, std::move(m)};
}

inline FockOperator creation(const FockSpace& s) { return annihilation(s).adjoint(); }

inline FockOperator number_operator(const FockSpace& s) {
  std::vector<double> d(static_cast<std::size_t>(s.dim()));
  for (int n = 0; n < s.dim(); ++n) d[static_cast<std::size_t>(n)] = n;
  return FockOperator::diagonal(s, d);
}

/// n^{-1/2} on n >= 1 and 0 on the vacuum.
inline FockOperator inverse_sqrt_number(const FockSpace& s) {
  std::vector<double> d(static_cast<std::size_t>(s.dim()));
  for (int n = 1; n < s.dim(); ++n) d[static_cast<std::size_t>(n)] = 1.0 / std::sqrt(static_cast<double>(n));
  return FockOperator::diagonal(s, d);
}

inline LadderOps ladder_ops(const FockSpace& s, int k) {
  if (k < 1) throw RangeError("ladder_ops: k must be >= 1");
  if (k > s.n_max) throw ConfigError("ladder_ops: k exceeds the Fock cutoff");
  Eigen::MatrixXcd lower = Eigen::MatrixXcd::Zero(s.dim(), s.dim());
  std::vector<double> number(static_cast<std::size_t>(s.dim()));
  std::vector<double> residue(static_cast<std::size_t>(s.dim()));
  for (int n = 0; n <= s.n_max; ++n) {
    number[static_cast<std::size_t>(n)] = n / k;
    residue[static_cast<std::size_t>(n)] = n % k;
    if (n >= k) lower(n - k, n) = std::sqrt(static_cast<double>(n / k));
  }
  FockOperator lo{s, std::move(lower)};
  FockOperator hi = lo.adjoint();
  return {k, std::move(lo), std::move(hi), FockOperator::diagonal(s, number), FockOperator::diagonal(s, residue)};
}

namespace detail {

// Evaluate a polynomial in D_k exactly on each residue and lift to a diagonal operator.
template <typename Poly>
FockOperator residue_polynomial(const FockSpace& s, int k, Poly&& poly) {
  std::vector<double> per_residue(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) per_residue[static_cast<std::size_t>(r)] = to_double(poly(Rational(r)));
  std::vector<double> d(static_cast<std::size_t>(s.dim()));
  for (int n = 0; n < s.dim(); ++n) d[static_cast<std::size_t>(n)] = per_residue[static_cast<std::size_t>(n % k)];
  return FockOperator::diagonal(s, d);
}

}  // namespace detail

/**
 * F^(k) = ((-1)^(k-1)/(k-1)!) prod_{j=1}^{k-1} (D_k - j), cross-checked
 * residue by residue against the Stirling expansion sum_m S_k^(m) D_k^(m-1).
 */
inline FockOperator build_F(const FockSpace& s, int k) {
  if (k < 2) throw RangeError("build_F: k must be >= 2");
  const Rational prefactor = rational((k - 1) % 2 == 0 ? 1 : -1) / Rational(factorial(static_cast<unsigned>(k - 1)));
  std::vector<Rational> stirling;
  for (int m = 1; m <= k; ++m) stirling.emplace_back(stirling_first(k, m));

  auto product_form = [&](const Rational& d) {
    Rational p = prefactor;
    for (int j = 1; j <= k - 1; ++j) p *= d - j;
    return p;
  };
  auto stirling_form = [&](const Rational& d) {
    Rational acc = 0;
    for (std::size_t i = stirling.size(); i-- > 0;) acc = acc * d + stirling[i];
    return Rational(prefactor * acc);
  };
  for (int r = 0; r < k; ++r) {
    if (product_form(Rational(r)) != stirling_form(Rational(r)))
      throw ConsistencyError("build_F: product and Stirling forms disagree at residue " + std::to_string(r));
  }
  return detail::residue_polynomial(s, k, product_form);
}

/// G^(k) = sum_{l=1}^{k-1} p_l^(k) D_k^l.
inline FockOperator build_G(const FockSpace& s, int k) {
  const InterpolationCoeffs p = interp_coeffs(k);
  return detail::residue_polynomial(s, k, [&p](const Rational& d) { return p.evaluate(d); });
}

/// E^(k) = (I + N_k)^(-1/2) A_k F^(k) + G^(k).
inline FockOperator build_E(const FockSpace& s, int k) {
  const LadderOps ops = ladder_ops(s, k);
  std::vector<double> inv_sqrt(static_cast<std::size_t>(s.dim()));
  for (int n = 0; n < s.dim(); ++n) inv_sqrt[static_cast<std::size_t>(n)] = 1.0 / std::sqrt(1.0 + n / k);
  return FockOperator::diagonal(s, inv_sqrt) * ops.lower * build_F(s, k) + build_G(s, k);
}

/// X^(k) = E^(k) n^(-1/2) a^dag.
inline FockOperator build_X(const FockSpace& s, int k) {
  return build_E(s, k) * inverse_sqrt_number(s) * creation(s);
}

/// Angles phi_0..phi_{k-2} and phases mu_0..mu_{k-1} of |omega_k>.
struct HighestWeightSpec {
  int k = 2;
  std::vector<double> angles;
  std::vector<double> phases;
};

inline FockVector highest_weight_vector(const FockSpace& s, const HighestWeightSpec& spec) {
  const int k = spec.k;
  if (k < 2) throw RangeError("highest_weight_vector: k must be >= 2");
  if (k > s.n_max) throw ConfigError("highest_weight_vector: k exceeds the Fock cutoff");
  if (spec.angles.size() != static_cast<std::size_t>(k - 1) || spec.phases.size() != static_cast<std::size_t>(k))
    throw ConfigError("highest_weight_vector: need k-1 angles and k phases");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(s.dim());
  double sines = 1.0;
  for (int j = 0; j < k; ++j) {
    const double gamma = j == k - 1 ? 1.0 : std::cos(spec.angles[static_cast<std::size_t>(j)]);
    amps(j) = sines * gamma * std::polar(1.0, spec.phases[static_cast<std::size_t>(j)]);
    if (j < k - 1) sines *= std::sin(spec.angles[static_cast<std::size_t>(j)]);
  }
  return {s, std::move(amps)};
}

/// Codeword |j-bar> of the k-residue qukit with coherent amplitude beta.
struct CodewordSpec {
  int k = 2;
  int j = 0;
  Complex beta{1.0, 0.0};
};

inline FockVector codeword_impl(const FockSpace& s, int k, int j, Complex beta) {
  if (k < 2) throw RangeError("codeword: k must be >= 2");
  if (j < 0 || j >= k) throw RangeError("codeword: j must lie in 0..k-1");
  if (j > s.n_max) throw ConfigError("codeword: residue lies above the cutoff");
  const double b2 = std::norm(beta);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(s.dim());
  // term = beta^l / sqrt(l!), built incrementally.
  Complex term = 1.0;
  int l = 0;
  for (; k * l + j <= s.n_max; ++l) {
    amps(k * l + j) = std::exp(-0.5 * b2) * term;
    term *= beta / std::sqrt(static_cast<double>(l + 1));
  }
  // Poisson tail e^{-|b|^2} sum_{m >= l} |b|^{2m}/m!, summed directly.
  double weight = 0.0;
  if (b2 > 0.0) {
    double p = std::exp(-b2 + l * std::log(b2) - std::lgamma(l + 1.0));
    for (int m = l; p > 1e-300 && m < l + 10000; ++m) {
      weight += p;
      p *= b2 / (m + 1);
    }
  }
  const double norm = amps.norm();
  if (norm > 0.0) amps /= norm;
  FockVector v{s, std::move(amps)};
  v.truncation_weight_ = weight;
  return v;
}

inline FockVector codeword(const FockSpace& s, const CodewordSpec& spec) {
  return codeword_impl(s, spec.k, spec.j, spec.beta);
}

/// R^(k): ones on the subdiagonal and in the top-right corner.
inline Eigen::MatrixXcd cyclic_shift_matrix(int k) {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(k, k);
  for (int j = 0; j < k; ++j) r((j + 1) % k, j) = 1.0;
  return r;
}

/// <i-bar| X^(k) |j-bar> over the k codewords.
inline Eigen::MatrixXcd logical_matrix(const FockSpace& s, int k, Complex beta) {
  const FockOperator x = build_X(s, k);
  std::vector<FockVector> words;
  for (int j = 0; j < k; ++j) words.push_back(codeword(s, {k, j, beta}));
  Eigen::MatrixXcd m(k, k);
  for (int j = 0; j < k; ++j) {
    const FockVector image = x * words[static_cast<std::size_t>(j)];
    for (int i = 0; i < k; ++i) m(i, j) = words[static_cast<std::size_t>(i)].inner(image);
  }
  return m;
}

/**
 * The k-boson functor applied to an arbitrary ladder: given a raising
 * operator b^dag and the diagonal of its number operator N_b, returns
 * (b^dag)^k g(N_b) with g(m) = sqrt((floor(m/k)+1) m! / (m+k)!), which acts
 * as sqrt(floor(m/k)+1) |m+k) on the normalized ladder states.
 */
inline FockOperator kboson_functor(const FockOperator& raise, const std::vector<double>& ladder_number, int k) {
  const FockSpace& s = raise.space();
  std::vector<double> g(static_cast<std::size_t>(s.dim()));
  for (int n = 0; n < s.dim(); ++n) {
    const double m = ladder_number[static_cast<std::size_t>(n)];
    double ratio = std::floor(m / k) + 1.0;
    for (int i = 1; i <= k; ++i) ratio /= m + i;
    g[static_cast<std::size_t>(n)] = std::sqrt(ratio);
  }
  FockOperator power = FockOperator::identity(s);
  for (int i = 0; i < k; ++i) power = power * raise;
  return power * FockOperator::diagonal(s, g);
}

/// Max deviation between the composed tower operator F_k(F_l(a^dag)) and
/// A_{kl}^dag on the states |k l s> inside the guard band.
struct SemigroupResidual {
  double on_sector = 0.0;   // |k l s> sector (asserted)
  double off_sector = 0.0;  // other states of the l-tower (reported only)
};

inline SemigroupResidual semigroup_compose_residuals(const FockSpace& s, int k, int l) {
  if (k < 1 || l < 1) throw RangeError("semigroup_compose_check: k and l must be >= 1");
  if (4 * k * l > s.n_max) throw ConfigError("semigroup_compose_check: need k*l <= n_max/4");
  const LadderOps tower = ladder_ops(s, l);
  std::vector<double> induced(static_cast<std::size_t>(s.dim()));
  for (int n = 0; n < s.dim(); ++n) induced[static_cast<std::size_t>(n)] = n / l;
  const FockOperator composed = kboson_functor(tower.raise, induced, k);
  const FockOperator direct = ladder_ops(s, k * l).raise;
  SemigroupResidual res;
  const int limit = s.n_max - k * l;
  for (int n = 0; n <= limit; ++n) {
    const double diff = (composed.matrix().col(n) - direct.matrix().col(n)).cwiseAbs().maxCoeff();
    if (n % (k * l) == 0) {
      res.on_sector = std::max(res.on_sector, diff);
    } else if (n % l == 0) {
      res.off_sector = std::max(res.off_sector, diff);
    }
  }
  return res;
}

inline double semigroup_compose_check(const FockSpace& s, int k, int l) {
  return semigroup_compose_residuals(s, k, l).on_sector;
}

}  // namespace vq
