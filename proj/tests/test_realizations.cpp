#include <gtest/gtest.h>

#include "vq/realizations/modes.hpp"
#include "vq/realizations/svir.hpp"
#include "vq/realizations/witt.hpp"

using namespace vq;

TEST(Witt, GeneratorAction) {
  const LaurentPolynomial z3 = LaurentPolynomial::monomial(3);
  EXPECT_EQ(witt_gen(2)(z3), LaurentPolynomial::monomial(5, -3));
  EXPECT_TRUE(witt_gen(-4)(LaurentPolynomial::monomial(0)).is_zero());
  EXPECT_THROW(witt_gen(13), RangeError);
}

TEST(Witt, RelationsOnMixedPolynomial) {
  LaurentPolynomial p = LaurentPolynomial::monomial(-3, rational(2, 7));
  p.add(5, rational(-1, 3));
  p.add(0, 4);
  for (int m = -6; m <= 6; ++m)
    for (int n = -6; n <= 6; ++n) EXPECT_TRUE(witt_relation_residual(m, n, p).is_zero()) << m << "," << n;
}

namespace {

// [A, B] restricted to columns i in [lo, hi).
bool commutator_matches(const GaussianMatrix& a, const GaussianMatrix& b, const GaussianMatrix& expected,
                        std::size_t lo, std::size_t hi) {
  const GaussianMatrix c = a * b - b * a;
  for (std::size_t j = lo; j < hi; ++j)
    for (std::size_t i = 0; i < c.rows(); ++i)
      if (!(c(i, j) == expected(i, j))) return false;
  return true;
}

GaussianMatrix scaled(const GaussianMatrix& m, long s) {
  GaussianMatrix out = m;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = out(i, j) * GaussianRational(Rational(s));
  return out;
}

}  // namespace

TEST(Su11, BundledRepresentationsCloseAwayFromEdges) {
  for (Su11Kind kind : {Su11Kind::circle, Su11Kind::one_boson}) {
    Su11Params p;
    p.kind = kind;
    p.cutoff = 12;
    const Su11Rep r = su11_rep(p);
    const std::size_t lo = kind == Su11Kind::circle ? 2 : 0;
    const std::size_t hi = r.dim() - 2 * static_cast<std::size_t>(r.step);
    EXPECT_TRUE(commutator_matches(r.k3, r.kplus, r.kplus, lo, hi)) << r.name;
    EXPECT_TRUE(commutator_matches(r.k3, r.kminus, scaled(r.kminus, -1), lo, hi)) << r.name;
    EXPECT_TRUE(commutator_matches(r.kplus, r.kminus, scaled(r.k3, -2), lo, hi)) << r.name;
  }
}

TEST(Su11, IntegerMuIsSingular) {
  Su11Params p;
  p.mu = Rational(2);
  EXPECT_THROW(su11_rep(p), SingularError);
}

TEST(Svir, FermionicBracketsVanish) {
  Su11Params p;
  p.cutoff = 12;
  const SvirRealization s = svir_build(p, 2);
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m)
      EXPECT_TRUE(super_bracket(s.F.at(n), s.F.at(m)).matrix.is_zero()) << n << "," << m;
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      EXPECT_TRUE(super_bracket(s.G.at(n), s.G.at(m)).matrix.is_zero()) << n << "," << m;
}

TEST(Svir, CarrierMismatchIsRejected) {
  GradedOperator a{GaussianMatrix(2, 2), 0, "a"};
  GradedOperator b{GaussianMatrix(2, 2), 0, "b"};
  EXPECT_THROW(super_bracket(a, b), SizeError);
}

TEST(Modes, BosonCentralCharge) {
  const ModeAlgebra alg = ModeAlgebra::boson(12);
  EXPECT_EQ(boson_central_charge(0, 0, alg).c, Rational(2));
  const CentralChargeFit fit = boson_central_charge(rational(1, 2), rational(1, 3), alg);
  EXPECT_TRUE(fit.consistent_at_1);
  EXPECT_EQ(fit.c, Rational(4));
}

TEST(Modes, FermionCentralChargeAtHalf) {
  const ModeAlgebra alg = ModeAlgebra::fermion(12);
  const CentralChargeFit fit = fermion_central_charge(rational(1, 2), alg);
  EXPECT_TRUE(fit.consistent_at_1);
  EXPECT_EQ(fit.c, Rational(1));
}

TEST(Modes, OscillatorAlgebra) {
  const ModeAlgebra alg = ModeAlgebra::boson(6);
  const ModeState vac = vacuum_state();
  // a^dag_{-1} creates the oscillator a_1 removes, with a sign: [a_1, a^dag_{-1}] = -1.
  const ModeState s = mode_a(alg, 1)(mode_adag(alg, -1)(vac));
  EXPECT_EQ(vacuum_coefficient(s), Rational(-1));
  EXPECT_TRUE(mode_a(alg, 1)(mode_a(alg, -1)(vac)).empty());
  EXPECT_TRUE(mode_a(alg, 2)(vac).empty());
  EXPECT_THROW(mode_a(alg, 7)(vac), RangeError);
}

TEST(Modes, FermionAnticommutator) {
  const ModeAlgebra alg = ModeAlgebra::fermion(6);
  const ModeState vac = vacuum_state();
  const ModeOperator f = mode_f(alg, 1);
  const ModeOperator fd = mode_fdag(alg, -1);
  const ModeState one = fd(vac);
  // {f_{1/2}, f^dag_{-1/2}} = 1 on the vacuum.
  const ModeState lhs = add(f(fd(vac)), fd(f(vac)));
  EXPECT_EQ(lhs, vac);
  EXPECT_FALSE(one.empty());
}

TEST(Modes, WindowTooSmallForIndex) {
  EXPECT_THROW(free_boson_L(3, 0, 0, ModeAlgebra::boson(8)), ConfigError);
  EXPECT_THROW(free_fermion_L(-3, 0, ModeAlgebra::fermion(8)), ConfigError);
}
