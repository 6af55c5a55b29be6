#pragma once

// Hidden-variable (HV) values of Mermin operators and their maxima.
//
// A local HV model assigns a cube root of unity to every local observable
// and uses the same value wherever that observable appears. |v(M_k)| only
// depends on per-site ratios:
//   N >= 4: R_i = v(Y_i) / v(X_i)                      (v(X...X) factored out)
//   N  = 3: R_i = v(X_i) / v(Y_i), S_i = v(W_i) / v(Y_i) (v(YYY) factored out)
//
// Three maximizers are provided: exhaustive search over ratio tuples, a
// search over ratio multisets that uses permutation symmetry, and the
// closed-form comparison of the uniform and single-departure models.
// All comparisons are exact; floating values are for display.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmermin/cyclotomic.hpp"
#include "qmermin/mermin.hpp"

namespace qmermin {

/// Per-site values, each a cube root of unity. `w` is used only by N = 3 operators.
struct HvAssignment {
  std::vector<Phase> x;
  std::vector<Phase> y;
  std::vector<Phase> w;
};

/// Per-site ratios as cube roots of unity; `s` is non-empty only for N = 3.
struct RatioAssignment {
  std::vector<Phase> r;
  std::vector<Phase> s;

  /// Phase exponents (0, 3 or 6) of r followed by s.
  std::vector<int> exponents() const;
  static RatioAssignment fromExponents(std::span<const int> r, std::span<const int> s = {});

  bool operator==(const RatioAssignment&) const = default;
  bool operator<(const RatioAssignment& o) const { return exponents() < o.exponents(); }
};

enum class HvMethod { Brute, Symmetric, Theorem };
std::string toString(HvMethod m);

enum class RatioConvention {
  YOverX,      ///< R_i = v(Y_i)/v(X_i)
  XOverYWOverY ///< R_i = v(X_i)/v(Y_i), S_i = v(W_i)/v(Y_i)
};
std::string toString(RatioConvention c);
RatioConvention conventionFor(int n);

enum class TheoremModel { Uniform, SingleDeparture, Tie };
std::string toString(TheoremModel m);

struct TheoremDetail {
  Int uniformSquared = 0;
  Int singleDepartureSquared = 0;
  TheoremModel winner = TheoremModel::Uniform;
  /// (A^N - B^N - C^N)/3 and (A^{N-1}B + B^{N-1}C - C^{N-1}A)/3 for odd N.
  std::optional<double> collinearUniform;
  std::optional<double> collinearSingleDeparture;
};

struct HvOutcome {
  int n = 0;
  int k = 0;
  HvMethod method = HvMethod::Brute;
  Cyclotomic maxMagnitudeSquared;
  double maxMagnitude = 0.0;
  /// Lexicographically first maximizers by phase exponents, capped.
  std::vector<RatioAssignment> argmax;
  /// Number of maximizing ratio tuples; not computed by the theorem method.
  std::optional<Int> argmaxCount;
  std::int64_t quantumValue = 0;
  double ratioA = 0.0;
  RatioConvention convention = RatioConvention::YOverX;
  std::optional<TheoremDetail> theorem;

  /// maxMagnitudeSquared as a rational integer; throws if it is not one.
  Int maxSquared() const;
};

struct SearchOptions {
  int jobs = 1;
  int maxBruteN = 14;
  std::size_t argmaxCap = 10;
};

inline constexpr int kBruteHardLimit = 14;
inline constexpr int kSymmetricLimit = 60;

/// Sum over terms of weight * product of the assigned local values.
Cyclotomic hvValue(const MerminOperator& op, const HvAssignment& assignment);

/// Same sum with the global phase factored out (see the conventions above).
Cyclotomic ratioValue(const MerminOperator& op, const RatioAssignment& ratios);

/// Ratios induced by a full assignment under the convention used for op.n().
RatioAssignment inducedRatios(const HvAssignment& assignment, int n);

/// Exhaustive search: 3^N tuples for N >= 4, 9^3 (R, S) tuples for N = 3.
HvOutcome hvMaxBrute(int n, int k, const SearchOptions& options = {});

/// Search over ratio multisets (n0, n1, n2); O(N^2) evaluations. N >= 4.
HvOutcome hvMaxSymmetric(int n, int k, const SearchOptions& options = {});

/// Closed-form uniform vs single-departure comparison, valid for the k in theoremKSet(n).
HvOutcome hvMaxTheorem(int n, int k);

/// The k values for which the closed-form comparison is claimed to be the
/// maximum: {2N mod 3} for odd N, {2N+1, 2N+2} mod 3 for even N.
std::vector<int> theoremKSet(int n);

struct Magnitudes {
  double a;  ///< |1 + omega^2 a^2| = 2 cos(pi/9)
  double b;  ///< |1 + a^2|         = 2 cos(2 pi/9)
  double c;  ///< |1 + omega a^2|   = 2 cos(4 pi/9)
};
Magnitudes magnitudesABC();

/// (A^N - B^N - C^N) - (A^{N-1}B + B^{N-1}C - C^{N-1}A), all over 3, for real N.
double collinearDifference(double n);

/// Root of collinearDifference on [9, 11], by bisection to 1e-6.
double crossoverN();

struct Asymptotics {
  double hvAsymptote;       ///< A^N / 3
  double ratioGrowthBase;   ///< 2 / A
};
Asymptotics asymptotics(int n);

struct OptimalK {
  int n = 0;
  std::vector<int> ks;                 ///< argmax of M_Q / M_HVM over k
  std::vector<HvOutcome> perK;         ///< index = k
};

/// Evaluates all three k with the symmetric search (brute for N = 3).
OptimalK optimalK(int n, const SearchOptions& options = {});

/// Exact comparison of Q1/sqrt(M1) against Q2/sqrt(M2): -1, 0 or +1.
int compareRatios(std::int64_t q1, Int m1, std::int64_t q2, Int m2);

}  // namespace qmermin
