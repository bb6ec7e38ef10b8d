#pragma once

/**
 * @file laughlin.hpp
 * @brief Alternant and Schur expansions of Vandermonde powers, exact
 * Gaussian plasma norms, a Monte Carlo oracle for them, and evaluation of
 * the Laughlin wavefunction.
 *
 * Delta(z) = prod_{i>j} (z_i - z_j) over z_0 .. z_{N-1}. Because Delta^p is
 * (anti)symmetric, only monomials with non-decreasing exponent tuples are
 * stored. They are built one particle at a time from
 *
 *   Delta_N^p = Delta_{N-1}^p * prod_{j<N-1} (z_{N-1} - z_j)^p,
 *
 * looking up the smaller expansion at sorted tuples with the sorting sign.
 * Sum of |coefficients| is at most 2^{pN(N-1)/2} <= 2^105 at the supported
 * scale, so the fold runs in 128-bit integers.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vq/errors.hpp"
#include "vq/exact/dense_matrix.hpp"
#include "vq/exact/rational.hpp"

namespace vq {

using ExponentTuple = std::vector<int>;

inline constexpr int kMaxExpandParticles = 6;
inline constexpr int kMaxExpandPower = 7;
inline constexpr int kMaxPlasmaParticles = 5;
inline constexpr int kMaxPlasmaPower = 3;
inline constexpr int kMaxLaughlinParticles = 8;

/// Coefficients of Delta^p on monomials z_0^{e_0} ... z_{N-1}^{e_{N-1}} with e non-decreasing.
struct SymmetricMonomialTable {
  int N = 0;
  int p = 0;
  std::map<ExponentTuple, BigInt> coeffs;
};

namespace detail {

// Tuples are packed 8 bits per entry; entries never exceed p(N-1) <= 35.
inline std::uint64_t pack_tuple(const int* e, int n) {
  std::uint64_t key = 0;
  for (int i = 0; i < n; ++i) key = (key << 8U) | static_cast<std::uint64_t>(e[i]);
  return key;
}

struct PowerFold {
  int n = 0;
  int p = 0;
  std::vector<std::vector<int>> tuples;
  std::vector<__int128> values;
  std::unordered_map<std::uint64_t, std::size_t> index;

  // Coefficient at an arbitrary (unsorted) tuple of length n.
  [[nodiscard]] __int128 lookup(int* e) const {
    bool odd_swaps = false;
    for (int i = 1; i < n; ++i)
      for (int j = i; j > 0 && e[j - 1] > e[j]; --j) {
        std::swap(e[j - 1], e[j]);
        odd_swaps = !odd_swaps;
      }
    const auto it = index.find(pack_tuple(e, n));
    if (it == index.end()) return 0;
    const __int128 v = values[it->second];
    return (odd_swaps && p % 2 == 1) ? -v : v;
  }

  void insert(std::vector<int> t, __int128 v) {
    index.emplace(pack_tuple(t.data(), n), values.size());
    tuples.push_back(std::move(t));
    values.push_back(v);
  }
};

// All non-decreasing tuples of length n, entries in [0, cap], summing to total.
inline void sorted_tuples(int n, int cap, int total, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  const int placed = static_cast<int>(prefix.size());
  if (placed == n) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  const int lo = prefix.empty() ? 0 : prefix.back();
  const int remaining = n - placed;
  for (int v = lo; v <= cap; ++v) {
    if (v * remaining > total) break;
    if (cap * remaining < total) break;
    prefix.push_back(v);
    sorted_tuples(n, cap, total - v, prefix, out);
    prefix.pop_back();
  }
}

inline PowerFold fold_level(const PowerFold& prev, const std::vector<__int128>& binom_signed) {
  const int n = prev.n + 1;
  const int p = prev.p;
  PowerFold next;
  next.n = n;
  next.p = p;
  std::vector<std::vector<int>> candidates;
  std::vector<int> prefix;
  sorted_tuples(n, p * (n - 1), p * n * (n - 1) / 2, prefix, candidates);

  std::vector<int> sub(static_cast<std::size_t>(n - 1));
  std::vector<int> scratch(static_cast<std::size_t>(n - 1));
  for (auto& mu : candidates) {
    // q_j is the power of z_j drawn from (z_{n-1} - z_j)^p; sum fixed by mu_{n-1}.
    const int q_total = p * (n - 1) - mu[static_cast<std::size_t>(n - 1)];
    if (q_total < 0) continue;
    __int128 acc = 0;
    auto dfs = [&](auto&& self, int j, int left, __int128 weight) -> void {
      if (j == n - 1) {
        if (left != 0) return;
        std::copy(sub.begin(), sub.end(), scratch.begin());
        const __int128 a = prev.lookup(scratch.data());
        if (a != 0) acc += weight * a;
        return;
      }
      const int slots_after = n - 2 - j;
      for (int q = 0; q <= p && q <= left; ++q) {
        if (left - q > p * slots_after) continue;
        const int rest = mu[static_cast<std::size_t>(j)] - q;
        if (rest < 0) break;
        sub[static_cast<std::size_t>(j)] = rest;
        self(self, j + 1, left - q, weight * binom_signed[static_cast<std::size_t>(q)]);
      }
    };
    dfs(dfs, 0, q_total, 1);
    if (acc != 0) next.insert(std::move(mu), acc);
  }
  return next;
}

}  // namespace detail

/// Delta^p for N particles, monomial form.
inline SymmetricMonomialTable vandermonde_power_monomials(int N, int p) {
  if (N < 1 || p < 1) throw RangeError("vandermonde_power: N and p must be >= 1");
  if (N > kMaxExpandParticles || p > kMaxExpandPower) throw SizeError("vandermonde_power: limited to N <= 6, p <= 7");
  std::vector<__int128> binom_signed;
  for (int q = 0; q <= p; ++q) {
    __int128 c = 1;
    for (int i = 0; i < q; ++i) c = c * (p - i) / (i + 1);
    binom_signed.push_back(q % 2 == 0 ? c : -c);
  }
  detail::PowerFold level;
  level.n = 1;
  level.p = p;
  level.insert({0}, 1);
  for (int n = 2; n <= N; ++n) level = detail::fold_level(level, binom_signed);

  SymmetricMonomialTable out;
  out.N = N;
  out.p = p;
  for (std::size_t i = 0; i < level.tuples.size(); ++i) out.coeffs.emplace(level.tuples[i], from_int128(level.values[i]));
  return out;
}

/// Sum_l g_l |z^{l_0} ... z^{l_{N-1}}| over strictly increasing l.
struct AlternantExpansion {
  int N = 0;
  std::map<ExponentTuple, Rational> coeffs;

  /// Exact value at rational points.
  [[nodiscard]] Rational evaluate(const std::vector<Rational>& z) const {
    if (static_cast<int>(z.size()) != N) throw SizeError("AlternantExpansion::evaluate: need N points");
    Rational total = 0;
    for (const auto& [l, g] : coeffs) {
      RationalMatrix m(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
              ipow(z[static_cast<std::size_t>(i)], static_cast<unsigned>(l[static_cast<std::size_t>(j)]));
      total += g * m.determinant();
    }
    return total;
  }

  /// CSV: l0,...,l{N-1},coeff_num,coeff_den.
  void write_csv(std::ostream& os) const {
    for (int i = 0; i < N; ++i) os << 'l' << i << ',';
    os << "coeff_num,coeff_den\n";
    for (const auto& [l, g] : coeffs) {
      for (int e : l) os << e << ',';
      os << g.get_num().get_str() << ',' << g.get_den().get_str() << '\n';
    }
  }
};

/// Delta^p as a sum of alternants; p must be odd (even powers are symmetric).
inline AlternantExpansion vandermonde_power_expand(int N, int p) {
  if (p % 2 == 0) throw ConfigError("vandermonde_power_expand: even powers are symmetric and have no alternant form");
  const SymmetricMonomialTable t = vandermonde_power_monomials(N, p);
  AlternantExpansion out;
  out.N = N;
  for (const auto& [e, c] : t.coeffs) {
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw ConsistencyError("vandermonde_power_expand: repeated exponent in an odd power");
    }
    out.coeffs.emplace(e, Rational(c));
  }
  return out;
}

/// Partition lambda (N parts, non-increasing, zeros kept) to g_Y^(s).
struct SchurExpansion {
  int N = 0;
  int s = 0;
  /// Sign relating the stored coefficients to those of the discriminant power.
  int global_sign = 1;
  std::map<std::vector<int>, Rational, std::greater<>> coeffs;
};

inline std::vector<int> tuple_to_partition(const ExponentTuple& l) {
  const int n = static_cast<int>(l.size());
  std::vector<int> lambda;
  for (int j = 1; j <= n; ++j) lambda.push_back(l[static_cast<std::size_t>(n - j)] - (n - j));
  return lambda;
}

inline SchurExpansion schur_expand(int N, int s) {
  if (s < 0) throw RangeError("schur_expand: s must be >= 0");
  const AlternantExpansion alt = vandermonde_power_expand(N, 2 * s + 1);
  SchurExpansion out;
  out.N = N;
  out.s = s;
  out.global_sign = (s * N * (N - 1) / 2) % 2 == 0 ? 1 : -1;
  for (const auto& [l, g] : alt.coeffs) out.coeffs.emplace(tuple_to_partition(l), g);
  return out;
}

/// Gaussian inner product of two alternant expansions.
inline Rational slater_inner(const AlternantExpansion& a, const AlternantExpansion& b) {
  if (a.N != b.N) throw SizeError("slater_inner: particle numbers differ");
  Rational sum = 0;
  for (const auto& [l, g] : a.coeffs) {
    const auto it = b.coeffs.find(l);
    if (it == b.coeffs.end()) continue;
    BigInt weight = 1;
    for (int e : l) weight *= factorial(static_cast<unsigned>(e));
    sum += g * it->second * Rational(weight);
  }
  return sum * Rational(factorial(static_cast<unsigned>(a.N)));
}

/// int prod d^2z/pi e^{-sum|z|^2} prod_{i<j} |z_i - z_j|^{2m}.
inline Rational plasma_norm(int N, int m) {
  if (N < 1 || m < 1) throw RangeError("plasma_norm: N and m must be >= 1");
  if (N > kMaxPlasmaParticles || m > kMaxPlasmaPower) throw SizeError("plasma_norm: limited to N <= 5, m <= 3");
  if (N == 1) return 1;
  // Monomials are orthogonal with <z^e, z^e> = prod e_i!; each sorted tuple
  // stands for all its distinct permutations, which share |coefficient|.
  const SymmetricMonomialTable t = vandermonde_power_monomials(N, m);
  BigInt total = 0;
  for (const auto& [e, c] : t.coeffs) {
    BigInt weight = factorial(static_cast<unsigned>(N));
    for (std::size_t i = 0; i < e.size();) {
      std::size_t j = i;
      while (j < e.size() && e[j] == e[i]) ++j;
      weight /= factorial(static_cast<unsigned>(j - i));
      i = j;
    }
    for (int x : e) weight *= factorial(static_cast<unsigned>(x));
    total += c * c * weight;
  }
  if (m % 2 == 1) {
    const AlternantExpansion alt = vandermonde_power_expand(N, m);
    if (slater_inner(alt, alt) != Rational(total))
      throw ConsistencyError("plasma_norm: monomial and alternant norms disagree");
  }
  return Rational(total);
}

/// Norm of the matrix Chern-Simons ground state at level kappa, z-sector only.
inline Rational matrix_cs_ground_norm(int N, int kappa) { return plasma_norm(N, kappa); }

struct McEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kMinMcSamples = 10000;
inline constexpr unsigned kMcShards = 16;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

namespace detail {

struct McShard {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;
};

inline McShard plasma_shard(int N, int m, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  std::vector<std::complex<double>> z(static_cast<std::size_t>(N));
  McShard s;
  for (std::uint64_t t = 0; t < samples; ++t) {
    for (auto& zi : z) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      zi = {re, im};
    }
    double f = 1.0;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < i; ++j) f *= std::pow(std::norm(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]), m);
    ++s.n;
    const double delta = f - s.mean;
    s.mean += delta / static_cast<double>(s.n);
    s.m2 += delta * (f - s.mean);
  }
  return s;
}

}  // namespace detail

/// MC estimate of plasma_norm with z_i drawn from (1/pi) e^{-|z|^2}; shards are merged in order.
inline McEstimate plasma_norm_mc(int N, int m, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1) {
  if (N < 1 || m < 1) throw RangeError("plasma_norm_mc: N and m must be >= 1");
  if (samples < kMinMcSamples) throw ConfigError("plasma_norm_mc: need at least 10^4 samples");
  std::vector<detail::McShard> shards(kMcShards);
  auto run = [&](unsigned shard) {
    const std::uint64_t share = samples / kMcShards + (shard < samples % kMcShards ? 1 : 0);
    shards[shard] = detail::plasma_shard(N, m, share, splitmix64(seed ^ splitmix64(shard)));
  };
  threads = std::max(1U, std::min(threads, kMcShards));
  if (threads == 1) {
    for (unsigned s = 0; s < kMcShards; ++s) run(s);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (unsigned s = w; s < kMcShards; s += threads) run(s);
      });
    for (auto& t : pool) t.join();
  }
  detail::McShard total;
  for (const auto& s : shards) {
    if (s.n == 0) continue;
    const double n = static_cast<double>(total.n + s.n);
    const double delta = s.mean - total.mean;
    total.mean += delta * static_cast<double>(s.n) / n;
    total.m2 += s.m2 + delta * delta * static_cast<double>(total.n) * static_cast<double>(s.n) / n;
    total.n += s.n;
  }
  McEstimate out;
  out.mean = total.mean;
  out.samples = total.n;
  out.seed = seed;
  const double variance = total.n > 1 ? total.m2 / static_cast<double>(total.n - 1) : 0.0;
  out.standard_error = std::sqrt(variance / static_cast<double>(total.n));
  return out;
}

inline std::complex<double> cpow(std::complex<double> z, int e) {
  std::complex<double> r = 1.0;
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

/// psi_l(z) = z^l e^{-|z|^2/2} / sqrt(pi).
inline std::complex<double> lll_basis(int l, std::complex<double> z) {
  if (l < 0) throw RangeError("lll_basis: l must be >= 0");
  return cpow(z, l) * std::exp(-0.5 * std::norm(z)) / std::sqrt(std::numbers::pi);
}

inline std::complex<double> vandermonde_value(const std::vector<std::complex<double>>& z) {
  std::complex<double> d = 1.0;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) d *= z[i] - z[j];
  return d;
}

/// pi^{-N/2} e^{-sum|z|^2/2} Delta(z)^{2s+1}, unnormalized.
inline std::complex<double> laughlin_eval(int N, int s, const std::vector<std::complex<double>>& z) {
  if (N < 1 || N > kMaxLaughlinParticles) throw SizeError("laughlin_eval: N must lie in 1..8");
  if (s < 0) throw RangeError("laughlin_eval: s must be >= 0");
  if (static_cast<int>(z.size()) != N) throw SizeError("laughlin_eval: need N points");
  double r2 = 0.0;
  for (const auto& zi : z) r2 += std::norm(zi);
  return std::pow(std::numbers::pi, -0.5 * N) * std::exp(-0.5 * r2) * cpow(vandermonde_value(z), 2 * s + 1);
}

}  // namespace vq
