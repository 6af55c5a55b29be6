#include <gtest/gtest.h>

#include <random>

#include "qmermin/errors.hpp"
#include "qmermin/ghz.hpp"

namespace qmermin {
namespace {

ObservableWord wordFromIndex(std::size_t idx, int n, int bases) {
  std::vector<Basis> labels(n);
  for (int i = n - 1; i >= 0; --i, idx /= bases) labels[i] = static_cast<Basis>(idx % bases);
  return ObservableWord(labels);
}

std::size_t power(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Dense oracle: build the GHZ vector, apply the Kronecker-product matrix and
// test proportionality directly.
std::optional<Cyclotomic> denseEigenvalue(const ObservableWord& word, const GhzState& state) {
  const int n = static_cast<int>(word.size());
  const auto m = denseMatrix(word);
  std::vector<Cyclotomic> in(m.dim()), out(m.dim());
  for (int v = 0; v < 3; ++v) in[basisIndex(BasisState(n, static_cast<std::uint8_t>(v)))] = Cyclotomic::from(state.amplitude(v));
  for (std::size_t col = 0; col < m.dim(); ++col) out[m.row(col)] += in[col] * m.entry(col);
  const std::size_t ref = 0;
  if (out[ref].isZero()) return std::nullopt;
  // in[ref] = 1, so the candidate eigenvalue is out[ref].
  const Cyclotomic lambda = out[ref];
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (out[i] != lambda * in[i]) return std::nullopt;
  return lambda;
}

TEST(GhzState, Amplitudes) {
  const auto g = ghzState(5, 2);
  EXPECT_EQ(g.amplitude(0), Phase(0));
  EXPECT_EQ(g.amplitude(1), Phase(2));
  EXPECT_EQ(g.amplitude(2), Phase(4));
  EXPECT_STREQ(GhzState::normTag(), "1/sqrt(3)");
  EXPECT_THROW(ghzState(2, 0), InputError);
  EXPECT_THROW(ghzState(4, 3), InputError);
}

TEST(Eigencheck, SpecExamples) {
  EXPECT_EQ(eigencheck(ObservableWord::parse("XXX"), ghzState(3, 0)), Cyclotomic::integer(1));
  EXPECT_EQ(eigencheck(ObservableWord::parse("YYY"), ghzState(3, 0)), Cyclotomic::omegaPow(1));
  EXPECT_FALSE(eigencheck(ObservableWord::parse("XXY"), ghzState(3, 0)).has_value());
  EXPECT_EQ(eigencheck(ObservableWord::parse("XXY"), ghzState(3, 1)), Cyclotomic::integer(1));
  EXPECT_EQ(eigencheck(ObservableWord::parse("YYY"), Phase::omega(2), ghzState(3, 0)), Cyclotomic::integer(1));
  EXPECT_THROW(eigencheck(ObservableWord::parse("XX"), ghzState(3, 0)), InputError);
}

TEST(Eigencheck, MatchesDenseOracle) {
  for (int n = 3; n <= 5; ++n)
    for (std::size_t idx = 0; idx < power(3, n); ++idx) {
      const auto word = wordFromIndex(idx, n, 3);
      for (int q = 0; q < 9; ++q) {
        const GhzState g(n, q);
        ASSERT_EQ(eigencheck(word, g), denseEigenvalue(word, g)) << word.str() << " q=" << q;
      }
    }
}

// Eigenvalue is omega^((t-k)/3) when t = k mod 3, otherwise not an eigenstate.
TEST(Eigencheck, PeriodicityExhaustive) {
  for (int n = 3; n <= 8; ++n)
    for (std::size_t idx = 0; idx < power(3, n); ++idx) {
      const auto word = wordFromIndex(idx, n, 3);
      for (int k = 0; k < 3; ++k) {
        const auto got = eigencheck(word, ghzState(n, k));
        const auto predicted = predictedEigenvalue(word.totalUnits(), k);
        ASSERT_EQ(got.has_value(), predicted.has_value());
        if (got) ASSERT_EQ(*got, Cyclotomic::from(*predicted));
      }
    }
}

TEST(Eigencheck, PeriodicitySampled) {
  std::mt19937_64 rng(2024);
  for (int n = 9; n <= 12; ++n) {
    std::uniform_int_distribution<std::size_t> pick(0, power(3, n) - 1);
    for (int s = 0; s < 2000; ++s) {
      const auto word = wordFromIndex(pick(rng), n, 3);
      const int k = s % 3;
      const auto got = eigencheck(word, ghzState(n, k));
      const auto predicted = predictedEigenvalue(word.totalUnits(), k);
      ASSERT_EQ(got.has_value(), predicted.has_value());
      if (got) ASSERT_EQ(*got, Cyclotomic::from(*predicted));
    }
  }
}

TEST(RotateState, FullTurnIsIdentity) {
  const auto g = ghzState(4, 1);
  const std::vector<int> nine{9, 0, 0, 0}, split{4, 2, 2, 1}, none{0, 0, 0, 0};
  EXPECT_EQ(rotateState(g, nine), g);
  EXPECT_EQ(rotateState(g, split), g);
  EXPECT_EQ(rotateState(g, none), g);
  const std::vector<int> one{1, 0, 0, 0};
  EXPECT_EQ(rotateState(g, one), GhzState(4, 2));
}

// Conjugating every local operator by the same rotation that moves the state
// preserves eigenvalues.
TEST(RotateState, ConjugationInvariance) {
  std::mt19937_64 rng(5);
  for (int n = 3; n <= 7; ++n)
    for (std::size_t idx = 0; idx < power(3, n); ++idx) {
      const auto word = wordFromIndex(idx, n, 3);
      std::vector<int> inc(n);
      std::vector<Basis> rotated(n);
      for (int i = 0; i < n; ++i) {
        const int u = rotationUnits(word[i]);
        inc[i] = std::uniform_int_distribution<int>(0, 2 - u)(rng);
        rotated[i] = static_cast<Basis>(u + inc[i]);
      }
      for (int q = 0; q < 3; ++q) {
        const GhzState g(n, q);
        ASSERT_EQ(eigencheck(word, g), eigencheck(ObservableWord(rotated), rotateState(g, inc)));
      }
    }
}

TEST(PredictedEigenvalue, Values) {
  EXPECT_EQ(predictedEigenvalue(0, 0), Phase::one());
  EXPECT_EQ(predictedEigenvalue(3, 0), Phase::omega(1));
  EXPECT_EQ(predictedEigenvalue(7, 1), Phase::omega(2));
  EXPECT_EQ(predictedEigenvalue(10, 1), Phase::omega(3));
  EXPECT_FALSE(predictedEigenvalue(2, 1).has_value());
}

}  // namespace
}  // namespace qmermin
