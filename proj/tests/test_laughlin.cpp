#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vq/laughlin.hpp"

using namespace vq;

TEST(VandermondePower, MonomialTableMatchesBruteExpansion) {
  for (int N = 2; N <= 4; ++N)
    for (int p = 1; p <= 4; ++p) {
      const SymmetricMonomialTable t = vandermonde_power_monomials(N, p);
      const oracle::Polynomial brute = oracle::brute_vandermonde_power(N, p);
      for (const auto& [tuple, c] : t.coeffs) {
        const oracle::Monomial mono(tuple.begin(), tuple.end());
        const auto it = brute.find(mono);
        ASSERT_NE(it, brute.end());
        EXPECT_EQ(it->second, c) << N << "," << p;
      }
      // Every brute term is a permutation of some sorted tuple in the table.
      for (const auto& [mono, c] : brute) {
        std::vector<int> sorted = mono;
        std::sort(sorted.begin(), sorted.end());
        bool found = false;
        for (const auto& [tuple, d] : t.coeffs) found = found || std::equal(tuple.begin(), tuple.end(), sorted.begin());
        EXPECT_TRUE(found);
      }
    }
}

TEST(VandermondePower, AlternantEvaluatesToProduct) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-7, 7);
  for (int N = 2; N <= 5; ++N) {
    const AlternantExpansion a = vandermonde_power_expand(N, 3);
    std::vector<Rational> z;
    for (int i = 0; i < N; ++i) z.push_back(rational(d(rng), 3));
    Rational prod = 1;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < i; ++j) prod *= ipow(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)], 3);
    EXPECT_EQ(a.evaluate(z), prod) << N;
  }
  EXPECT_THROW(vandermonde_power_expand(3, 2), ConfigError);
}

TEST(VandermondePower, SizeLimits) {
  EXPECT_THROW(vandermonde_power_monomials(kMaxExpandParticles + 1, 1), SizeError);
  EXPECT_THROW(vandermonde_power_monomials(3, kMaxExpandPower + 1), SizeError);
}

TEST(Schur, LaughlinOneThirdThreeParticles) {
  const SchurExpansion e = schur_expand(3, 1);
  for (const auto& [y, g] : e.coeffs) {
    int size = 0;
    for (int part : y) size += part;
    EXPECT_EQ(size, 6);
  }
  EXPECT_FALSE(e.coeffs.empty());
}

TEST(PlasmaNorm, ExactValues) {
  EXPECT_EQ(plasma_norm(1, 1), Rational(1));
  EXPECT_EQ(plasma_norm(3, 1), Rational(12));
  EXPECT_EQ(plasma_norm(5, 1), Rational(34560));
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(plasma_norm(2, m), oracle::two_particle_norm(m)) << m;
  EXPECT_EQ(matrix_cs_ground_norm(3, 2), plasma_norm(3, 2));
}

TEST(PlasmaNorm, MonteCarloSeedDeterministic) {
  const McEstimate a = plasma_norm_mc(3, 1, 20000, 11);
  const McEstimate b = plasma_norm_mc(3, 1, 20000, 11, 4);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.standard_error, b.standard_error);
  EXPECT_LT(std::abs(a.mean - 12.0), 4.0 * a.standard_error);
  EXPECT_THROW(plasma_norm_mc(3, 1, 10, 1), ConfigError);
}

TEST(Laughlin, AntisymmetricForOddPower) {
  const std::vector<std::complex<double>> z{{0.1, 0.2}, {-0.4, 0.3}, {0.7, -0.5}};
  std::vector<std::complex<double>> w = z;
  std::swap(w[0], w[2]);
  const auto v = laughlin_eval(3, 1, z);
  EXPECT_LT(std::abs(v + laughlin_eval(3, 1, w)), 1e-12 * std::abs(v));
  std::vector<std::complex<double>> c = z;
  c[1] = c[0];
  EXPECT_EQ(laughlin_eval(3, 1, c), std::complex<double>(0.0, 0.0));
}
