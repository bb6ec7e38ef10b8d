#pragma once

/**
 * @file modes.hpp
 * @brief Free-boson and free-fermion mode realizations of the Virasoro
 * algebra acting on sparse Fock states.
 *
 * Each pair (a_n, a_{-n}^dag) (resp. (f_r, f_{-r}^dag)) is one oscillator
 * b_l with b_l |0> = 0, labelled by l = n (resp. l = r, stored doubled):
 *
 *   boson:   a_l = b_l (l >= 1),  a_l = b_l^dag (l <= 0),
 *            a_j^dag = b_{-j} (j >= 0),  a_j^dag = -b_{-j}^dag (j <= -1),
 *   fermion: f_r = c_r (r > 0),  f_r = c_r^dag (r < 0),
 *            f_s^dag = c_{-s} (s > 0),  f_s^dag = c_{-s}^dag (s < 0),
 *
 * which reproduces [a_m^dag, a_n] = delta_{m+n} and {f_r, f_s^dag} = delta_{r+s}
 * with the vacuum a_m|0> = 0 (m >= 1), a_m^dag|0> = 0 (m >= 0),
 * f_r|0> = f_r^dag|0> = 0 (r >= 1/2).
 *
 * States live in the unnormalized occupation basis prod (b_l^dag)^{n_l} |0>,
 * fermion labels in ascending order. Normal ordering is :XY: = XY - <0|XY|0>,
 * i.e. annihilators moved right. Only finitely many terms of the infinite
 * mode sums act non-trivially on a finite-support state, so the sums are
 * evaluated exactly; the window only bounds which labels may be created.
 */

#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vq/errors.hpp"
#include "vq/exact/rational.hpp"

namespace vq {

enum class Statistics { boson, fermion };

struct ModeAlgebra {
  int window = 12;  // labels -window..window (fermions: half-integers inside it)
  Statistics statistics = Statistics::boson;
  int occupancy_cap = 0;  // 0 = unbounded (bosons); 1 for fermions
  std::string vacuum_convention;

  static ModeAlgebra boson(int window) {
    return {window, Statistics::boson, 0, "a_m|0>=0 (m>=1), a_m^dag|0>=0 (m>=0); :XY: = XY - <0|XY|0>"};
  }
  static ModeAlgebra fermion(int window) {
    return {window, Statistics::fermion, 1, "f_r|0>=0, f_r^dag|0>=0 (r>=1/2); :XY: = XY - <0|XY|0>"};
  }

  /// Largest storable label (fermion labels are doubled).
  [[nodiscard]] int label_bound() const { return statistics == Statistics::boson ? window : 2 * window; }
};

/// Oscillator label -> occupation number.
using Occupation = std::map<int, int>;
using ModeState = std::map<Occupation, Rational>;

inline ModeState vacuum_state() { return {{Occupation{}, Rational(1)}}; }

inline void accumulate(ModeState& into, const Occupation& occ, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = into.try_emplace(occ, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) into.erase(it);
  }
}

inline ModeState add(ModeState a, const ModeState& b, const Rational& scale = 1) {
  for (const auto& [occ, c] : b) accumulate(a, occ, scale * c);
  return a;
}

inline ModeState scaled(const ModeState& a, const Rational& s) {
  ModeState out;
  for (const auto& [occ, c] : a) accumulate(out, occ, s * c);
  return out;
}

/// A single oscillator factor scale * b_l or scale * b_l^dag.
struct OscillatorOp {
  int label = 0;
  bool create = false;
  int sign = 1;
};

namespace detail {

inline void require_in_window(const ModeAlgebra& alg, int label) {
  if (std::abs(label) > alg.label_bound())
    throw RangeError("mode operator leaves the window at label " + std::to_string(label));
}

inline ModeState apply_oscillator(const ModeAlgebra& alg, const OscillatorOp& op, const ModeState& s) {
  require_in_window(alg, op.label);
  ModeState out;
  for (const auto& [occ, c] : s) {
    const auto it = occ.find(op.label);
    const int n = it == occ.end() ? 0 : it->second;
    Rational coeff = op.sign < 0 ? Rational(-c) : c;
    if (alg.statistics == Statistics::fermion) {
      int before = 0;
      for (const auto& [l, k] : occ) {
        if (l >= op.label) break;
        before += k;
      }
      if (before % 2 != 0) coeff = -coeff;
    }
    Occupation next = occ;
    if (op.create) {
      if (alg.occupancy_cap > 0 && n >= alg.occupancy_cap) continue;
      ++next[op.label];
    } else {
      if (n == 0) continue;
      // b |n) = n |n-1) in the unnormalized boson basis.
      if (alg.statistics == Statistics::boson) coeff *= n;
      if (--next[op.label] == 0) next.erase(op.label);
    }
    accumulate(out, next, coeff);
  }
  return out;
}

}  // namespace detail

/// a_n (boson) in oscillator form.
inline OscillatorOp boson_a(int n) { return n >= 1 ? OscillatorOp{n, false, 1} : OscillatorOp{n, true, 1}; }
/// a_n^dag (boson) in oscillator form.
inline OscillatorOp boson_adag(int n) { return n >= 0 ? OscillatorOp{-n, false, 1} : OscillatorOp{-n, true, -1}; }
/// f_r, r given doubled (odd).
inline OscillatorOp fermion_f(int r2) { return r2 > 0 ? OscillatorOp{r2, false, 1} : OscillatorOp{r2, true, 1}; }
/// f_s^dag, s given doubled (odd).
inline OscillatorOp fermion_fdag(int s2) { return s2 > 0 ? OscillatorOp{-s2, false, 1} : OscillatorOp{-s2, true, 1}; }

/// Linear operator on sparse states with a Z2 degree.
struct ModeOperator {
  const ModeAlgebra* algebra = nullptr;
  int degree = 0;
  std::function<ModeState(const ModeState&)> act;

  ModeState operator()(const ModeState& s) const { return act(s); }
};

inline ModeOperator oscillator_operator(const ModeAlgebra& alg, OscillatorOp op, int degree) {
  return {&alg, degree, [&alg, op](const ModeState& s) { return detail::apply_oscillator(alg, op, s); }};
}

inline ModeOperator mode_a(const ModeAlgebra& alg, int n) { return oscillator_operator(alg, boson_a(n), 0); }
inline ModeOperator mode_adag(const ModeAlgebra& alg, int n) { return oscillator_operator(alg, boson_adag(n), 0); }
inline ModeOperator mode_f(const ModeAlgebra& alg, int r2) { return oscillator_operator(alg, fermion_f(r2), 1); }
inline ModeOperator mode_fdag(const ModeAlgebra& alg, int s2) { return oscillator_operator(alg, fermion_fdag(s2), 1); }

namespace detail {

// :XY: applied to s, with X, Y single oscillators.
inline ModeState normal_ordered_pair(const ModeAlgebra& alg, const OscillatorOp& x, const OscillatorOp& y,
                                     const ModeState& s) {
  if (!x.create && y.create) {
    // XY = +-YX + <0|XY|0>; drop the c-number.
    ModeState out = apply_oscillator(alg, x, s);
    out = apply_oscillator(alg, y, out);
    return alg.statistics == Statistics::fermion ? scaled(out, Rational(-1)) : out;
  }
  return apply_oscillator(alg, x, apply_oscillator(alg, y, s));
}

inline std::set<int> occupied_labels(const ModeState& s) {
  std::set<int> labels;
  for (const auto& [occ, c] : s)
    for (const auto& [l, n] : occ) labels.insert(l);
  return labels;
}

}  // namespace detail

inline constexpr int kMaxModeIndex = 3;

/**
 * L_n = sum_r r :a^dag_{n-r} a_r: + lambda (n+1) (a_n^dag + M n a_n).
 * Candidate r: those where the annihilating factor hits an occupied label,
 * plus the finite ranges where both factors annihilate or both create.
 */
inline ModeOperator free_boson_L(int n, const Rational& lambda, const Rational& M, const ModeAlgebra& alg) {
  if (alg.statistics != Statistics::boson) throw ConfigError("free_boson_L: needs a bosonic mode algebra");
  if (std::abs(n) > kMaxModeIndex) throw RangeError("free_boson_L: |n| must be <= 3");
  if (alg.window < 4 * std::abs(n)) throw ConfigError("free_boson_L: window must be >= 4|n|");
  auto act = [&alg, n, lambda, M](const ModeState& s) {
    std::set<int> rs;
    for (int l : detail::occupied_labels(s)) {
      rs.insert(l);      // a_r has label r
      rs.insert(l + n);  // a^dag_{n-r} has label r - n
    }
    for (int r = std::min(n + 1, 1); r <= std::max(0, n); ++r) rs.insert(r);
    ModeState out;
    for (int r : rs) {
      if (r == 0) continue;
      out = add(std::move(out), detail::normal_ordered_pair(alg, boson_adag(n - r), boson_a(r), s), Rational(r));
    }
    const Rational lin = lambda * (n + 1);
    if (sgn(lin) != 0) {
      out = add(std::move(out), detail::apply_oscillator(alg, boson_adag(n), s), lin);
      if (n != 0) out = add(std::move(out), detail::apply_oscillator(alg, boson_a(n), s), Rational(lin * M * n));
    }
    return out;
  };
  return {&alg, 0, act};
}

/// L_n = -sum_r (r - lambda n) :f^dag_{n-r} f_r:, r in Z + 1/2.
inline ModeOperator free_fermion_L(int n, const Rational& lambda, const ModeAlgebra& alg) {
  if (alg.statistics != Statistics::fermion) throw ConfigError("free_fermion_L: needs a fermionic mode algebra");
  if (std::abs(n) > kMaxModeIndex) throw RangeError("free_fermion_L: |n| must be <= 3");
  if (alg.window < 4 * std::abs(n)) throw ConfigError("free_fermion_L: window must be >= 4|n|");
  auto act = [&alg, n, lambda](const ModeState& s) {
    const int n2 = 2 * n;
    std::set<int> rs;  // doubled r
    for (int l : detail::occupied_labels(s)) {
      rs.insert(l);       // f_r has label r
      rs.insert(l + n2);  // f^dag_{n-r} has label r - n
    }
    for (int r2 = -std::abs(n2) - 1; r2 <= std::abs(n2) + 1; r2 += 2) {
      const bool both_create = r2 < 0 && n2 - r2 < 0;
      const bool both_annihilate = r2 > 0 && n2 - r2 > 0;
      if (both_create || both_annihilate) rs.insert(r2);
    }
    ModeState out;
    for (int r2 : rs) {
      const Rational weight = -(rational(r2, 2) - lambda * n);
      out = add(std::move(out), detail::normal_ordered_pair(alg, fermion_fdag(n2 - r2), fermion_f(r2), s), weight);
    }
    return out;
  };
  return {&alg, 0, act};
}

/// [[X, Y]] applied to s.
inline ModeState super_commutator_apply(const ModeOperator& x, const ModeOperator& y, const ModeState& s) {
  const int sign = (x.degree * y.degree) % 2 == 1 ? 1 : -1;
  return add(x(y(s)), y(x(s)), Rational(sign));
}

/// <0| X |0>: vacuum coefficient of X|0>.
inline Rational vacuum_coefficient(const ModeState& s) {
  const auto it = s.find(Occupation{});
  return it == s.end() ? Rational(0) : it->second;
}

/// Basis states with at most `quanta` excitations on labels |l| <= radius (fermions: doubled radius).
inline std::vector<ModeState> bounded_support_states(const ModeAlgebra& alg, int radius, int quanta) {
  std::vector<int> labels;
  if (alg.statistics == Statistics::boson) {
    for (int l = -radius; l <= radius; ++l) labels.push_back(l);
  } else {
    for (int l = -2 * radius + 1; l <= 2 * radius - 1; l += 2) labels.push_back(l);
  }
  std::vector<ModeState> out{vacuum_state()};
  std::vector<Occupation> frontier{Occupation{}};
  for (int q = 1; q <= quanta; ++q) {
    std::set<Occupation> next;
    for (const auto& occ : frontier)
      for (int l : labels) {
        Occupation o = occ;
        if (alg.occupancy_cap > 0 && o[l] >= alg.occupancy_cap) continue;
        ++o[l];
        next.insert(o);
      }
    frontier.assign(next.begin(), next.end());
    for (const auto& o : frontier) out.push_back({{o, Rational(1)}});
  }
  return out;
}

/// Coefficients of <0|[L_m, L_{-m}]|0> = A m^3 + B m, fitted from m = 2, 3.
struct CentralChargeFit {
  Rational A;
  Rational B;
  Rational c;                   // 12 A
  std::vector<Rational> vevs;   // m = 1, 2, 3
  bool consistent_at_1 = false; // A + B reproduces m = 1
};

inline CentralChargeFit fit_central_charge(const std::function<ModeOperator(int)>& L) {
  CentralChargeFit fit;
  for (int m = 1; m <= 3; ++m) {
    const ModeOperator lm = L(m);
    const ModeOperator lmm = L(-m);
    fit.vevs.push_back(vacuum_coefficient(super_commutator_apply(lm, lmm, vacuum_state())));
  }
  // v2 = 8A + 2B, v3 = 27A + 3B.
  fit.A = (2 * fit.vevs[2] - 3 * fit.vevs[1]) / 30;
  fit.B = (fit.vevs[1] - 8 * fit.A) / 2;
  fit.c = 12 * fit.A;
  fit.consistent_at_1 = fit.A + fit.B == fit.vevs[0];
  return fit;
}

inline CentralChargeFit boson_central_charge(const Rational& lambda, const Rational& M, const ModeAlgebra& alg) {
  return fit_central_charge([&](int m) { return free_boson_L(m, lambda, M, alg); });
}

inline CentralChargeFit fermion_central_charge(const Rational& lambda, const ModeAlgebra& alg) {
  return fit_central_charge([&](int m) { return free_fermion_L(m, lambda, alg); });
}

}  // namespace vq
