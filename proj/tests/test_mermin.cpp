#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qmermin/errors.hpp"
#include "qmermin/mermin.hpp"

namespace qmermin {
namespace {

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(ConcurrentSet, SmallExamples) {
  std::vector<std::string> got;
  for (const auto& w : concurrentSet(4, 1)) got.push_back(w.str());
  EXPECT_EQ(got, (std::vector<std::string>{"XXXY", "XXYX", "XYXX", "YXXX", "YYYY"}));
  EXPECT_EQ(concurrentSet(4, 2).size(), 6u);
  EXPECT_EQ(concurrentSet(3, 0).size(), 9u);
  for (const auto& w : concurrentSet(3, 2)) EXPECT_EQ(w.totalUnits() % 3, 2);
}

TEST(ConcurrentSet, PartitionsAllWords) {
  for (int n = 3; n <= 16; ++n) {
    std::set<std::string> seen;
    std::size_t total = 0;
    for (int k = 0; k < 3; ++k) {
      const auto set = concurrentSet(n, k);
      EXPECT_TRUE(std::is_sorted(set.begin(), set.end()));
      for (const auto& w : set) seen.insert(w.str());
      total += set.size();
    }
    const std::size_t expected = n == 3 ? 27u : (std::size_t{1} << n);
    EXPECT_EQ(total, expected) << n;
    EXPECT_EQ(seen.size(), expected) << n;
  }
}

TEST(QuantumValue, BinomialCounts) {
  for (int n = 4; n <= 40; ++n)
    for (int k = 0; k < 3; ++k) {
      std::int64_t expected = 0;
      for (int j = k; j <= n; j += 3) expected += binomial(n, j);
      EXPECT_EQ(quantumValue(n, k), expected);
    }
  for (int n = 4; n <= 16; ++n)
    for (int k = 0; k < 3; ++k) EXPECT_EQ(merminOperator(n, k).quantumValue(), quantumValue(n, k));
  EXPECT_EQ(quantumValue(3, 1), 9);
  EXPECT_EQ(quantumValue(4, 2), 6);
}

TEST(QuantumValue, TableFormula) {
  const std::vector<std::int64_t> expected{5, 10, 21, 42, 85, 170, 341, 682, 1365, 2730};
  for (int n = 4; n <= 13; ++n) {
    EXPECT_EQ(tableQuantumValue(n), expected[n - 4]);
    // The tabulated value is the term count of the smaller sets, which hold
    // the optimal k.
    std::vector<std::int64_t> counts;
    for (int k = 0; k < 3; ++k) counts.push_back(quantumValue(n, k));
    EXPECT_EQ(*std::min_element(counts.begin(), counts.end()), tableQuantumValue(n));
  }
}

TEST(TermWeight, CancelsEigenvalue) {
  for (int t = 0; t < 30; ++t)
    for (int k = 0; k < 3; ++k) {
      const auto p = predictedEigenvalue(t, k);
      if (p) EXPECT_EQ(*p * termWeight(t, k), Phase::one());
    }
}

TEST(MerminOperator, EveryWeightedTermFixesGhz) {
  for (int n = 3; n <= 10; ++n)
    for (int k = 0; k < 3; ++k) {
      const auto op = merminOperator(n, k);
      EXPECT_EQ(op.usesThirdBasis(), n == 3);
      for (const auto& t : op.terms())
        ASSERT_EQ(eigencheck(t.word, t.weight, ghzState(n, k)), Cyclotomic::integer(1)) << t.word.str();
      const auto image = applyOperator(op, ghzState(n, k));
      ASSERT_TRUE(image.has_value());
      for (int m = 0; m < 3; ++m)
        EXPECT_EQ((*image)[m], Cyclotomic::integer(op.quantumValue()) * ghzState(n, k).amplitude(m));
    }
}

TEST(MerminOperator, WrongStateIsNotAnEigenstate) {
  const auto op = merminOperator(5, 0);
  const auto ghz = ghzState(5, 1);
  const auto image = applyOperator(op, ghz);
  ASSERT_TRUE(image.has_value());  // monomial words keep the GHZ support
  bool proportional = true;
  for (int m = 0; m < 3; ++m) proportional = proportional && (*image)[m] == Cyclotomic::integer(op.quantumValue()) * ghz.amplitude(m);
  EXPECT_FALSE(proportional);
  for (const auto& t : op.terms()) EXPECT_FALSE(eigencheck(t.word, ghz).has_value());
}

TEST(MerminOperator, DisplayedWVariantBreaksEigenstates) {
  bool anyFailure = false;
  for (int k = 0; k < 3; ++k) {
    const auto op = merminOperator(3, k);
    for (const auto& t : op.terms()) {
      const auto v = eigencheck(t.word, t.weight, ghzState(3, k), WVariant::Displayed);
      if (!v || *v != Cyclotomic::integer(1)) anyFailure = true;
    }
  }
  EXPECT_TRUE(anyFailure);
}

TEST(SampleTerms, DeterministicAndOnTriangle) {
  const auto a = sampleTerms(14, 1, 500, 42);
  const auto b = sampleTerms(14, 1, 500, 42);
  ASSERT_EQ(a.size(), 500u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].word, b[i].word);
    EXPECT_EQ(a[i].word.count(Basis::Y) % 3, 1);
    EXPECT_FALSE(a[i].word.usesW());
    EXPECT_EQ(a[i].weight, termWeight(a[i].word.totalUnits(), 1));
  }
  EXPECT_THROW(sampleTerms(3, 0, 10, 1), InputError);
}

TEST(ClosedForm, MatchesOperatorForAllK) {
  for (int n = 4; n <= 12; ++n)
    for (int k = 0; k < 3; ++k) {
      const auto report = closedFormCheck(n, k);
      EXPECT_TRUE(report.ok) << n << "," << k;
      ASSERT_EQ(report.entries.size(), static_cast<std::size_t>(n + 1));
      for (const auto& e : report.entries) {
        EXPECT_EQ(e.words, binomial(n, e.yCount));
        EXPECT_EQ(e.expected.isZero(), e.yCount % 3 != k);
      }
    }
}

TEST(ClosedForm, Guards) {
  EXPECT_THROW(closedFormCheck(3, 0), InputError);
  EXPECT_THROW(closedFormCheck(21, 0), GuardViolation);
}

// Independent oracle: brute force over sign assignments with complex arithmetic.
TEST(Qubit, ComparisonAgainstBruteForce) {
  for (int n = 3; n <= 12; ++n) {
    const int k = n % 2;
    const auto c = qubitComparison(n, k);
    EXPECT_EQ(c.quantumValue, std::int64_t{1} << (n - 1));
    // The operator is the real or imaginary part of prod(X_i + iY_i); with
    // hidden values x_i, y_i = +-1, |v| = |Re or Im prod(x_i + i y_i)|.
    double best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::complex<double> p = 1;
      for (int i = 0; i < n; ++i) p *= std::complex<double>(1, (mask >> i) & 1 ? -1 : 1);
      best = std::max(best, std::abs(k == 0 ? p.real() : p.imag()));
    }
    EXPECT_NEAR(c.hvMax, best, 1e-9) << n;
    EXPECT_EQ(static_cast<double>(c.hvMaxSquared), std::round(best * best));
    EXPECT_EQ(c.matchesReference, n % 2 == 1) << n;
    if (n % 2 == 0) EXPECT_DOUBLE_EQ(c.ratio, std::ldexp(1.0, n / 2 - 1));
  }
}

}  // namespace
}  // namespace qmermin
