#pragma once

// Concurrent observable sets and the weighted Mermin operators M_k built from them.
//
// For N >= 4 the operator for GHZ_k is the sum of every {X,Y}-word whose
// Y-count j satisfies j = k (mod 3), weighted by omega^{-(j-k)/3}. For N = 3
// the third basis W is added and the word's total rotation t replaces j.
// With these weights every term has GHZ_k as eigenvector with eigenvalue 1.

#include <cstdint>
#include <optional>
#include <vector>

#include "qmermin/cyclotomic.hpp"
#include "qmermin/ghz.hpp"
#include "qmermin/pauli.hpp"

namespace qmermin {

struct MerminTerm {
  ObservableWord word;
  Phase weight;  // omega^0, omega^1 or omega^2
};

class MerminOperator {
 public:
  MerminOperator(int n, int k, std::vector<MerminTerm> terms);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<MerminTerm>& terms() const { return terms_; }
  std::int64_t quantumValue() const { return static_cast<std::int64_t>(terms_.size()); }
  bool usesThirdBasis() const { return n_ == 3; }

 private:
  int n_;
  int k_;
  std::vector<MerminTerm> terms_;
};

/// omega^{-(t-k)/3}, the weight that cancels a term's GHZ_k eigenvalue.
Phase termWeight(int totalUnits, int k);

/// Words of the concurrent set for GHZ_k, sorted by their string form.
std::vector<ObservableWord> concurrentSet(int n, int k);

MerminOperator merminOperator(int n, int k);

/// `count` uniformly random {X,Y}-words of length N >= 4 on the k triangle,
/// each with its weight; deterministic for a given seed. Used where 2^N is too
/// many words to enumerate.
std::vector<MerminTerm> sampleTerms(int n, int k, int count, std::uint64_t seed);

/// Term count of merminOperator(n, k), computed by binomial counting.
std::int64_t quantumValue(int n, int k);

/// (2^N - 1)/3 for even N and (2^N - 2)/3 for odd N.
std::int64_t tableQuantumValue(int n);

/// Sum of weight * word over all terms applied to GHZ_k; returns the
/// amplitudes landing on |00..0>, |11..1>, |22..2>, or nullopt if any term
/// leaves the GHZ support.
std::optional<std::array<Cyclotomic, 3>> applyOperator(const MerminOperator& op, const GhzState& state,
                                                       WVariant variant = WVariant::Conjugation);

struct ClosedFormEntry {
  int yCount = 0;
  Cyclotomic coefficientTimesThree;  // 3 x coefficient of one word with this Y-count
  Cyclotomic expected;               // 3 * a^{2k} * weight, or 0 off the triangle
  std::int64_t words = 0;            // C(N, j)
  bool ok = false;
};

struct ClosedFormReport {
  int n = 0;
  int k = 0;
  std::vector<ClosedFormEntry> entries;  // one per Y-count 0..N
  bool ok = false;
};

/// Expands (1/3)[(X + a^2 Y)^N + omega^{2k} (X + omega a^2 Y)^N + omega^k (X + omega^2 a^2 Y)^N]
/// word by word and compares each coefficient with a^{2k} times the weight the
/// constructed operator gives that word (zero for words not in the operator).
ClosedFormReport closedFormCheck(int n, int k);

/// d = 2 analogue: (1/2)[(X + iY)^N + (-1)^k (X - iY)^N] with +-1 hidden values.
struct QubitComparison {
  int n = 0;
  int k = 0;
  std::int64_t quantumValue = 0;     // |eigenvalue| on the matching qubit GHZ state
  std::int64_t hvMaxSquared = 0;     // exact max |v|^2 over all 2^N ratio sign tuples
  double hvMax = 0.0;
  double ratio = 0.0;                // quantumValue / hvMax
  double referenceRatio = 0.0;       // 2^{N/2} (even N) or 2^{(N-1)/2} (odd N)
  /// ratio == referenceRatio, decided with integers: Q^2 == reference^2 * hvMaxSquared.
  bool matchesReference = false;
};

inline constexpr int kMaxQubitN = 20;

QubitComparison qubitComparison(int n, int k);

}  // namespace qmermin
