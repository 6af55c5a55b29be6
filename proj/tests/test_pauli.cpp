#include <gtest/gtest.h>

#include <random>

#include "qmermin/errors.hpp"
#include "qmermin/pauli.hpp"

namespace qmermin {
namespace {

LocalOperator cube(const LocalOperator& m) { return m * m * m; }

std::vector<ObservableWord> allWords(int n, int bases) {
  std::vector<ObservableWord> out;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= bases;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<Basis> labels(n);
    std::size_t r = idx;
    for (int i = n - 1; i >= 0; --i, r /= bases) labels[i] = static_cast<Basis>(r % bases);
    out.emplace_back(labels);
  }
  return out;
}

TEST(LocalOperator, ShiftMovesBasisStates) {
  const auto x = localMatrix(Basis::X);
  EXPECT_EQ(x, LocalOperator::shift());
  EXPECT_EQ(x.perm, (std::array<std::uint8_t, 3>{1, 2, 0}));
  for (const auto& p : x.phases) EXPECT_EQ(p, Phase::one());
}

TEST(LocalOperator, CubesAreIdentity) {
  for (auto v : {WVariant::Conjugation, WVariant::Displayed})
    for (auto b : {Basis::X, Basis::Y, Basis::W}) EXPECT_EQ(cube(localMatrix(b, v)), LocalOperator::identity());
}

TEST(LocalOperator, ColumnPhases) {
  auto exps = [](const LocalOperator& m) {
    return std::array<int, 3>{m.phases[0].exponent(), m.phases[1].exponent(), m.phases[2].exponent()};
  };
  EXPECT_EQ(exps(localMatrix(Basis::Y)), (std::array<int, 3>{1, 1, 7}));
  EXPECT_EQ(exps(localMatrix(Basis::W)), (std::array<int, 3>{2, 2, 5}));
  EXPECT_EQ(exps(localMatrix(Basis::W, WVariant::Displayed)), (std::array<int, 3>{5, 2, 2}));
}

TEST(LocalOperator, RotationConjugation) {
  const auto x = localMatrix(Basis::X);
  EXPECT_EQ(rotation(1) * x * rotation(1).inverse(), localMatrix(Basis::Y));
  EXPECT_EQ(rotation(2) * x * rotation(2).inverse(), localMatrix(Basis::W));
  // Rotating by three units multiplies X by omega.
  const auto r3 = rotation(3) * x * rotation(3).inverse();
  for (const auto& p : r3.phases) EXPECT_EQ(p, Phase::omega(1));
}

TEST(LocalOperator, DenseFormHasOneEntryPerColumn) {
  for (auto b : {Basis::X, Basis::Y, Basis::W}) {
    const auto m = localMatrix(b);
    const auto d = m.dense();
    for (int col = 0; col < 3; ++col)
      for (int row = 0; row < 3; ++row) {
        if (row == m.perm[col]) EXPECT_EQ(d[row][col], Cyclotomic::from(m.phases[col]));
        else EXPECT_TRUE(d[row][col].isZero());
      }
  }
}

TEST(ObservableWord, ParseAndCounts) {
  const auto w = ObservableWord::parse("XYWYX");
  EXPECT_EQ(w.size(), 5u);
  EXPECT_EQ(w.str(), "XYWYX");
  EXPECT_EQ(w.count(Basis::Y), 2);
  EXPECT_EQ(w.totalUnits(), 4);
  EXPECT_TRUE(w.usesW());
  EXPECT_THROW(ObservableWord::parse("XZY"), InputError);
}

TEST(ApplyWord, SpecExamples) {
  const BasisState s222{2, 2, 2}, s000{0, 0, 0};
  const auto yyy = applyWord(ObservableWord::parse("YYY"), s222);
  EXPECT_EQ(yyy.phase, Phase::omega(1));
  EXPECT_EQ(yyy.image, s000);
  const auto www = applyWord(ObservableWord::parse("WWW"), s000);
  EXPECT_EQ(www.phase, Phase::omega(2));
  EXPECT_EQ(www.image, (BasisState{1, 1, 1}));
}

TEST(ApplyWord, MatchesDenseKroneckerProduct) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& word : allWords(n, 3)) {
      for (auto variant : {WVariant::Conjugation, WVariant::Displayed}) {
        const auto dense = denseMatrix(word, variant);
        ASSERT_EQ(dense.dim(), basisIndex(BasisState(n, 2)) + 1);
        for (std::size_t col = 0; col < dense.dim(); ++col) {
          const auto act = applyWord(word, basisState(col, n), variant);
          ASSERT_EQ(basisIndex(act.image), dense.row(col));
          ASSERT_EQ(act.phase, dense.entry(col));
        }
      }
    }
  }
}

TEST(MonomialMatrix, KroneckerOfLocalsMatchesProductOfActions) {
  const auto y = MonomialMatrix::fromLocal(localMatrix(Basis::Y));
  const auto x = MonomialMatrix::fromLocal(localMatrix(Basis::X));
  EXPECT_EQ(y.kron(x), denseMatrix(ObservableWord::parse("YX")));
  const auto yx = y.kron(x);
  EXPECT_EQ(yx * yx * yx, MonomialMatrix::identity(9));
}

TEST(DenseMatrix, GuardAboveEightQutrits) {
  EXPECT_NO_THROW(denseMatrix(ObservableWord::parse("XXXXXXXX")));
  EXPECT_THROW(denseMatrix(ObservableWord::parse("XXXXXXXXX")), GuardViolation);
}

TEST(BasisIndex, RoundTrip) {
  for (std::size_t i = 0; i < 243; ++i) EXPECT_EQ(basisIndex(basisState(i, 5)), i);
  EXPECT_EQ(basisIndex(BasisState{1, 0, 0}), 9u);
}

}  // namespace
}  // namespace qmermin
