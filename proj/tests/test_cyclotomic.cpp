#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "qmermin/cyclotomic.hpp"
#include "qmermin/errors.hpp"

namespace qmermin {
namespace {

using cd = std::complex<double>;

cd alphaC(int e) { return std::polar(1.0, 2.0 * std::numbers::pi * e / 9.0); }

// Floating evaluation of the raw coefficient vector, no reduction.
cd evaluate(const Cyclotomic& a) {
  cd s{};
  for (int j = 0; j < Cyclotomic::kDegree; ++j) s += static_cast<double>(a.coeff(j)) * alphaC(j);
  return s;
}

Cyclotomic randomElement(std::mt19937_64& rng, int bound = 20) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Cyclotomic::Coeffs c{};
  for (auto& x : c) x = d(rng);
  return Cyclotomic(c);
}

void expectNear(cd a, cd b, double tol = 1e-9) {
  EXPECT_NEAR(a.real(), b.real(), tol);
  EXPECT_NEAR(a.imag(), b.imag(), tol);
}

TEST(Phase, ExponentArithmeticIsModNine) {
  EXPECT_EQ(Phase(9).exponent(), 0);
  EXPECT_EQ(Phase(-1).exponent(), 8);
  EXPECT_EQ((Phase(5) * Phase(7)).exponent(), 3);
  EXPECT_EQ(Phase(4).inverse().exponent(), 5);
  EXPECT_EQ(Phase::omega(1).exponent(), 3);
  EXPECT_EQ(Phase::omega(2).exponent(), 6);
  EXPECT_TRUE(Phase::omega(2).isCubeRoot());
  EXPECT_FALSE(Phase(2).isCubeRoot());
  EXPECT_EQ(Phase(2).pow(5).exponent(), 1);
}

TEST(Cyclotomic, AlphaPowersReduceCorrectly) {
  for (int e = -18; e <= 18; ++e) expectNear(evaluate(Cyclotomic::alphaPow(e)), alphaC(e));
  // a^6 = -a^3 - 1
  EXPECT_EQ(Cyclotomic::alphaPow(6), (Cyclotomic{-1, 0, 0, -1, 0, 0}));
  // 1 + omega + omega^2 = 0
  EXPECT_TRUE((Cyclotomic::integer(1) + Cyclotomic::omegaPow(1) + Cyclotomic::omegaPow(2)).isZero());
}

TEST(Cyclotomic, ReduceFoldsLongVectors) {
  std::vector<Int> raw(20, 0);
  raw[9] = 2;   // 2 a^9 = 2
  raw[15] = 1;  // a^15 = a^6
  raw[17] = 3;  // 3 a^8
  const Cyclotomic r = Cyclotomic::reduce(raw);
  expectNear(evaluate(r), 2.0 + alphaC(6) + 3.0 * alphaC(8));
}

TEST(Cyclotomic, RingLawsAgainstComplexOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = randomElement(rng), b = randomElement(rng), c = randomElement(rng);
    expectNear(evaluate(a + b), evaluate(a) + evaluate(b));
    expectNear(evaluate(a - b), evaluate(a) - evaluate(b));
    expectNear(evaluate(a * b), evaluate(a) * evaluate(b), 1e-7);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Cyclotomic{});
    EXPECT_EQ(a * Cyclotomic::integer(1), a);
  }
}

TEST(Cyclotomic, PhaseMultiplicationMatchesElementMultiplication) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = randomElement(rng);
    for (int e = 0; e < 9; ++e) EXPECT_EQ(a * Phase(e), a * Cyclotomic::alphaPow(e));
  }
}

TEST(Cyclotomic, ConjugationIsAnInvolutiveAutomorphism) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = randomElement(rng), b = randomElement(rng);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    expectNear(evaluate(a.conj()), std::conj(evaluate(a)));
  }
}

TEST(Cyclotomic, NormIsMultiplicativeAndReal) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = randomElement(rng, 9), b = randomElement(rng, 9);
    EXPECT_TRUE(a.normSquared().isReal());
    EXPECT_EQ((a * b).normSquared(), a.normSquared() * b.normSquared());
    EXPECT_NEAR(a.normSquared().toComplex().real(), std::norm(evaluate(a)), 1e-6);
  }
}

TEST(Cyclotomic, EisensteinNormExamples) {
  const auto w = Cyclotomic::omegaPow(1), w2 = Cyclotomic::omegaPow(2);
  EXPECT_EQ(normSquared(Cyclotomic::integer(4) + w2).asInteger(), Int{13});
  EXPECT_EQ(normSquared(Cyclotomic::integer(1) + Cyclotomic::integer(7) * w2 + w).asInteger(), Int{36});
  EXPECT_EQ(normSquared(Cyclotomic::integer(7)).asInteger(), Int{49});
}

TEST(Cyclotomic, MagnitudesOfOnePlusRotatedAlphaSquared) {
  const auto a2 = Cyclotomic::alphaPow(2);
  const auto one = Cyclotomic::integer(1);
  EXPECT_NEAR(std::abs(toComplex(one + a2 * Phase::omega(2))), 2 * std::cos(std::numbers::pi / 9), 1e-12);
  EXPECT_NEAR(std::abs(toComplex(one + a2)), 2 * std::cos(2 * std::numbers::pi / 9), 1e-12);
  EXPECT_NEAR(std::abs(toComplex(one + a2 * Phase::omega(1))), 2 * std::cos(4 * std::numbers::pi / 9), 1e-12);
}

TEST(Cyclotomic, PowMatchesRepeatedProduct) {
  std::mt19937_64 rng(19);
  const auto a = randomElement(rng, 3);
  Cyclotomic p = Cyclotomic::integer(1);
  for (unsigned n = 0; n < 12; ++n) {
    EXPECT_EQ(a.pow(n), p);
    p *= a;
  }
}

TEST(Cyclotomic, DivExact) {
  const Cyclotomic a{6, -3, 9, 0, 12, 3};
  EXPECT_EQ(a.divExact(3), (Cyclotomic{2, -1, 3, 0, 4, 1}));
  EXPECT_THROW(a.divExact(4), std::domain_error);
}

TEST(Cyclotomic, AsIntegerAndStr) {
  EXPECT_EQ(Cyclotomic::integer(-5).asInteger(), Int{-5});
  EXPECT_FALSE(Cyclotomic::alphaPow(1).asInteger().has_value());
  EXPECT_EQ(Cyclotomic{}.str(), "0");
  EXPECT_EQ(toString(Int{-123}), "-123");
}

TEST(Cyclotomic, OverflowThrowsInsteadOfWrapping) {
  const Int big = Int{1} << 100;
  EXPECT_THROW(checked::mul(big, big), ArithmeticOverflow);
  EXPECT_THROW(checked::add(~(Int{1} << 127), Int{1}), ArithmeticOverflow);
  const Cyclotomic a = Cyclotomic::integer(big);
  EXPECT_THROW(a * a, ArithmeticOverflow);
}

}  // namespace
}  // namespace qmermin
