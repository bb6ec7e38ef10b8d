#pragma once

/**
 * @file svir.hpp
 * @brief Z2-graded operators, the super bracket, and the sVir realization
 *   L_k = i 2^{-(k+1)} P^k Q,  G_k = 2^{-(k+1)} P^k f_+ Q,  F_k = P^{k-1} f_+ f_-
 * with P = {K_3^{-1}, K_+}, Q = {K_3^{-1}, K_-}, on two su(1,1) carriers
 * tensored with the two-dimensional Clifford module.
 *
 * Everything is exact (Gaussian rationals). The one-boson carrier uses the
 * unnormalized basis |n) = (a^dag)^n |0>, where every matrix element is
 * rational; adjoints are taken with respect to its metric diag(n!).
 *
 * Negative indices are defined by X_{-k} = X_k^dag. F_0 would need P^{-1}
 * and is not built.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vq/errors.hpp"
#include "vq/exact/dense_matrix.hpp"
#include "vq/exact/rational.hpp"

namespace vq {

struct GradedOperator {
  GaussianMatrix matrix;
  int degree = 0;  // 0 bosonic, 1 fermionic
  std::string carrier;
};

/// [[X, Y]] = XY - (-1)^{deg X deg Y} YX.
inline GradedOperator super_bracket(const GradedOperator& x, const GradedOperator& y) {
  if (x.carrier != y.carrier || x.matrix.rows() != y.matrix.rows())
    throw SizeError("super_bracket: operators live on different carriers");
  GaussianMatrix xy = x.matrix * y.matrix;
  GaussianMatrix yx = y.matrix * x.matrix;
  GradedOperator out;
  out.matrix = (x.degree * y.degree) % 2 == 1 ? xy + yx : xy - yx;
  out.degree = (x.degree + y.degree) % 2;
  out.carrier = x.carrier;
  return out;
}

enum class Su11Kind { circle, one_boson };

/// Parameters of a bundled su(1,1) representation.
struct Su11Params {
  Su11Kind kind = Su11Kind::circle;
  Rational mu = rational(1, 3);  // circle only; must not be an integer
  int cutoff = 20;               // circle: window -cutoff..cutoff; one_boson: n <= cutoff
};

/// K_3, K_+, K_- with the metric defining the adjoint, on the bosonic carrier.
struct Su11Rep {
  Su11Params params;
  std::string name;
  GaussianMatrix k3, kplus, kminus;
  std::vector<Rational> metric;  // diagonal
  int step = 1;                  // number-basis shift of K_+
  bool truncated_below = true;   // circle windows are cut on both sides
  [[nodiscard]] std::size_t dim() const { return metric.size(); }
};

inline Su11Rep su11_rep(const Su11Params& p) {
  Su11Rep r;
  r.params = p;
  if (p.cutoff < 1) throw ConfigError("su11_rep: cutoff must be >= 1");
  if (p.kind == Su11Kind::circle) {
    if (p.mu.get_den() == 1) throw SingularError("su11_rep: integer mu puts 0 in the spectrum of K_3");
    const auto n = static_cast<std::size_t>(2 * p.cutoff + 1);
    r.name = "circle(mu=" + p.mu.get_str() + ")";
    r.k3 = r.kplus = r.kminus = GaussianMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational v = Rational(static_cast<long>(i) - p.cutoff) + p.mu;
      r.k3(i, i) = v;
      if (i + 1 < n) r.kplus(i + 1, i) = v;
      if (i > 0) r.kminus(i - 1, i) = v;
    }
    r.metric.assign(n, Rational(1));
    r.step = 1;
    r.truncated_below = true;
  } else {
    const auto n = static_cast<std::size_t>(p.cutoff + 1);
    r.name = "one_boson";
    r.k3 = r.kplus = r.kminus = GaussianMatrix(n, n);
    BigInt fact = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) fact *= static_cast<unsigned long>(i);
      r.metric.emplace_back(fact);
      r.k3(i, i) = rational(static_cast<long>(2 * i + 1), 4L);
      if (i + 2 < n) r.kplus(i + 2, i) = rational(1, 2);
      if (i >= 2) r.kminus(i - 2, i) = rational(static_cast<long>(i * (i - 1)), 2L);
    }
    r.metric.resize(n);
    r.step = 2;
    r.truncated_below = false;
  }
  for (std::size_t i = 0; i < r.dim(); ++i)
    if (r.k3(i, i).is_zero()) throw SingularError("su11_rep: K_3 is not invertible on the carrier");
  return r;
}

/// Adjoint with respect to the diagonal metric: G^{-1} X^H G.
inline GaussianMatrix metric_adjoint(const GaussianMatrix& x, const std::vector<Rational>& metric) {
  GaussianMatrix a = x.conjugate_transpose();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) a(i, j) *= GaussianRational(Rational(metric[j] / metric[i]));
  return a;
}

struct SvirRealization {
  Su11Rep rep;
  int k_max = 0;
  std::string carrier;
  std::vector<Rational> metric;  // on bosonic carrier (x) Clifford
  std::map<int, GradedOperator> L, G, F;
  GradedOperator f_plus, f_minus;
  /// Columns on which products of two generators (|index| <= k_max) and one
  /// generator of index up to 2 k_max never leave the truncated carrier.
  std::vector<std::size_t> validated;

  [[nodiscard]] GaussianMatrix adjoint(const GaussianMatrix& x) const { return metric_adjoint(x, metric); }
};

inline constexpr int kMaxSvirIndex = 4;

inline SvirRealization svir_build(const Su11Params& params, int k_max) {
  if (k_max < 1 || k_max > kMaxSvirIndex) throw RangeError("svir_build: k_max must lie in 1..4");
  SvirRealization s;
  s.rep = su11_rep(params);
  s.k_max = k_max;
  s.carrier = s.rep.name + "(x)Cl2[cutoff=" + std::to_string(params.cutoff) + "]";
  const Su11Rep& r = s.rep;
  const std::size_t n = r.dim();

  GaussianMatrix k3_inv(n, n);
  for (std::size_t i = 0; i < n; ++i) k3_inv(i, i) = GaussianRational(1) / r.k3(i, i);
  const GaussianMatrix p = k3_inv * r.kplus + r.kplus * k3_inv;
  const GaussianMatrix q = k3_inv * r.kminus + r.kminus * k3_inv;

  const GaussianMatrix id2 = GaussianMatrix::identity(2);
  GaussianMatrix fp(2, 2), fm(2, 2);
  fp(0, 1) = 1;
  fm(1, 0) = 1;
  const GaussianMatrix proj = fp * fm;

  for (std::size_t i = 0; i < n; ++i) {
    s.metric.push_back(r.metric[i]);
    s.metric.push_back(r.metric[i]);
  }
  s.f_plus = {kronecker(GaussianMatrix::identity(n), fp), 1, s.carrier};
  s.f_minus = {kronecker(GaussianMatrix::identity(n), fm), 1, s.carrier};

  const int top = 2 * k_max;
  GaussianMatrix p_power = GaussianMatrix::identity(n);  // P^k
  GaussianMatrix p_prev;                                  // P^{k-1}
  for (int k = 0; k <= top; ++k) {
    const GaussianRational scale(rational(1, 1L << (k + 1)));
    const GaussianMatrix pq = p_power * q;
    s.L[k] = {kronecker(pq * (GaussianRational::i() * scale), id2), 0, s.carrier};
    s.G[k] = {kronecker(pq * scale, fp), 1, s.carrier};
    if (k >= 1) s.F[k] = {kronecker(p_prev, proj), 0, s.carrier};
    p_prev = p_power;
    p_power = p_power * p;
  }
  for (int k = 1; k <= top; ++k) {
    s.L[-k] = {s.adjoint(s.L[k].matrix), 0, s.carrier};
    s.G[-k] = {s.adjoint(s.G[k].matrix), 1, s.carrier};
    s.F[-k] = {s.adjoint(s.F[k].matrix), 0, s.carrier};
  }

  // Each generator of index k moves at most |k| + 1 steps of K_+.
  const int guard = (2 * k_max + 2) * r.step;
  for (std::size_t i = 0; i < n; ++i) {
    const int from_top = static_cast<int>(n - 1 - i);
    const int from_bottom = static_cast<int>(i);
    if (from_top < guard) continue;
    if (r.truncated_below && from_bottom < guard) continue;
    s.validated.push_back(2 * i);
    s.validated.push_back(2 * i + 1);
  }
  return s;
}

/// Largest |entry| of x over the validated columns.
inline double guarded_residual(const SvirRealization& s, const GaussianMatrix& x) {
  double worst = 0.0;
  for (std::size_t c : s.validated)
    for (std::size_t r = 0; r < x.rows(); ++r) worst = std::max(worst, magnitude(x(r, c)));
  return worst;
}

/// One row of the closure residual table.
struct SvirResidual {
  std::string check;  // "LL", "LG", "LF", "FG", "FF", "GG"
  int n = 0;
  int m = 0;
  std::string rep;
  double residual = 0.0;
  bool exact_zero = false;  // the full (unguarded) matrix vanishes identically
};

namespace detail {

inline const GradedOperator* find_generator(const std::map<int, GradedOperator>& family, int index) {
  const auto it = family.find(index);
  return it == family.end() ? nullptr : &it->second;
}

}  // namespace detail

/// All closure residuals for |n|, |m| <= k_max, sorted by (check, n, m).
inline std::vector<SvirResidual> svir_residual_table(const SvirRealization& s) {
  std::vector<SvirResidual> rows;
  const int km = s.k_max;
  auto record = [&](const std::string& name, int n, int m, const GaussianMatrix& diff) {
    rows.push_back({name, n, m, s.rep.name, guarded_residual(s, diff), diff.is_zero()});
  };
  for (int n = -km; n <= km; ++n) {
    for (int m = -km; m <= km; ++m) {
      const GradedOperator& ln = s.L.at(n);
      // [[L_n, L_m]] - (n - m) L_{n+m}
      record("LL", n, m,
             super_bracket(ln, s.L.at(m)).matrix - s.L.at(n + m).matrix * GaussianRational(Rational(n - m)));
      // [[L_n, G_m]] - (n - m) G_{n+m}
      record("LG", n, m,
             super_bracket(ln, s.G.at(m)).matrix - s.G.at(n + m).matrix * GaussianRational(Rational(n - m)));
      // [[G_n, G_m]]
      record("GG", n, m, super_bracket(s.G.at(n), s.G.at(m)).matrix);
      const GradedOperator* fm = detail::find_generator(s.F, m);
      const GradedOperator* fn = detail::find_generator(s.F, n);
      const GradedOperator* fnm = detail::find_generator(s.F, n + m);
      // [[L_n, F_m]] + m F_{n+m}; skipped when it would need F_0.
      if (fm != nullptr) {
        GaussianMatrix d = super_bracket(ln, *fm).matrix;
        if (fnm != nullptr) {
          d += fnm->matrix * GaussianRational(Rational(m));
          record("LF", n, m, d);
        }
      }
      // [[F_n, G_m]] - G_{n+m}
      if (fn != nullptr) record("FG", n, m, super_bracket(*fn, s.G.at(m)).matrix - s.G.at(n + m).matrix);
      // [[F_n, F_m]]
      if (fn != nullptr && fm != nullptr) record("FF", n, m, super_bracket(*fn, *fm).matrix);
    }
  }
  std::sort(rows.begin(), rows.end(), [](const SvirResidual& a, const SvirResidual& b) {
    return std::tie(a.check, a.n, a.m) < std::tie(b.check, b.n, b.m);
  });
  return rows;
}

/// ([[L_n, L_m]])^dag - [[L_m^dag, L_n^dag]], exactly.
inline GaussianMatrix svir_hermiticity_defect(const SvirRealization& s, int n, int m) {
  const GradedOperator& ln = s.L.at(n);
  const GradedOperator& lm = s.L.at(m);
  const GradedOperator lhs{s.adjoint(super_bracket(ln, lm).matrix), 0, s.carrier};
  const GradedOperator ln_dag{s.adjoint(ln.matrix), 0, s.carrier};
  const GradedOperator lm_dag{s.adjoint(lm.matrix), 0, s.carrier};
  return lhs.matrix - super_bracket(lm_dag, ln_dag).matrix;
}

}  // namespace vq
