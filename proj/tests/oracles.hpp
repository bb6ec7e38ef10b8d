#pragma once

// Independent reference computations for the tests. Each one uses a
// different algorithm from the library routine it checks.

#include <functional>
#include <map>
#include <vector>

#include "vq/exact/rational.hpp"

namespace oracle {

using vq::BigInt;
using vq::Rational;

/// Partitions of n with every part satisfying `allowed`, top-down memoized
/// recursion on the largest part.
class PartitionCounter {
 public:
  explicit PartitionCounter(std::function<bool(int)> allowed) : allowed_(std::move(allowed)) {}

  BigInt count(int n) { return count(n, n); }

 private:
  BigInt count(int n, int largest) {
    if (n == 0) return 1;
    if (largest <= 0) return 0;
    const auto key = std::make_pair(n, largest);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = count(n, largest - 1);
    if (largest <= n && allowed_(largest)) total += count(n - largest, largest);
    memo_.emplace(key, total);
    return total;
  }

  std::function<bool(int)> allowed_;
  std::map<std::pair<int, int>, BigInt> memo_;
};

/// Dense coefficients of prod_{j=1}^{k-1} (x - j), lowest degree first.
inline std::vector<BigInt> falling_product(int k) {
  std::vector<BigInt> c{1};
  for (int j = 1; j <= k - 1; ++j) {
    std::vector<BigInt> next(c.size() + 1, BigInt(0));
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d + 1] += c[d];
      next[d] -= c[d] * j;
    }
    c = std::move(next);
  }
  return c;
}

/// Lagrange interpolation through (0,0), (1,1), ..., (k-1,1) by explicit
/// polynomial multiplication of the basis polynomials.
inline std::vector<Rational> lagrange_step_poly(int k) {
  std::vector<Rational> total(static_cast<std::size_t>(k), Rational(0));
  for (int r = 1; r < k; ++r) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (int j = 0; j < k; ++j) {
      if (j == r) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * j;
      }
      basis = std::move(next);
      denom *= r - j;
    }
    for (std::size_t d = 0; d < basis.size(); ++d) total[d] += basis[d] / denom;
  }
  return total;
}

using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, BigInt>;

/// prod_{i>j} (z_i - z_j)^p multiplied out factor by factor.
inline Polynomial brute_vandermonde_power(int N, int p) {
  Polynomial poly{{Monomial(static_cast<std::size_t>(N), 0), BigInt(1)}};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < i; ++j)
      for (int rep = 0; rep < p; ++rep) {
        Polynomial next;
        for (const auto& [mono, c] : poly) {
          Monomial a = mono;
          ++a[static_cast<std::size_t>(i)];
          next[a] += c;
          Monomial b = mono;
          ++b[static_cast<std::size_t>(j)];
          next[b] -= c;
        }
        for (auto it = next.begin(); it != next.end();) it = it->second == 0 ? next.erase(it) : std::next(it);
        poly = std::move(next);
      }
  return poly;
}

/// Two-particle Gaussian plasma norm: centre of mass and relative
/// coordinate separate, giving m! 2^m.
inline Rational two_particle_norm(int m) {
  BigInt v = 1;
  for (int j = 1; j <= m; ++j) v *= 2 * j;
  return Rational(v);
}

/// Coefficients of sum_n q^(n^2 + a n) / (q;q)_n up to q^order.
inline std::vector<BigInt> rogers_ramanujan_sum(int a, int order) {
  std::vector<BigInt> total(static_cast<std::size_t>(order) + 1, BigInt(0));
  for (int n = 0; n * n + a * n <= order; ++n) {
    // 1/(q;q)_n: partitions into parts <= n.
    std::vector<BigInt> parts(static_cast<std::size_t>(order) + 1, BigInt(0));
    parts[0] = 1;
    for (int part = 1; part <= n; ++part)
      for (int d = part; d <= order; ++d) parts[static_cast<std::size_t>(d)] += parts[static_cast<std::size_t>(d - part)];
    const int shift = n * n + a * n;
    for (int d = 0; d + shift <= order; ++d)
      total[static_cast<std::size_t>(d + shift)] += parts[static_cast<std::size_t>(d)];
  }
  return total;
}

}  // namespace oracle
