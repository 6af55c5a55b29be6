#pragma once

// GHZ states (|0..0> + a^q |1..1> + a^2q |2..2>) / sqrt(3), kept sparse.
// The 1/sqrt(3) normalization is a symbolic tag; it never enters the ring.

#include <array>
#include <optional>
#include <span>
#include <string>

#include "qmermin/cyclotomic.hpp"
#include "qmermin/pauli.hpp"

namespace qmermin {

class GhzState {
 public:
  /// phaseIndex q in 0..8; q in {0,1,2} are the three states used for Mermin operators.
  GhzState(int n, int phaseIndex);

  int n() const { return n_; }
  int phaseIndex() const { return q_; }
  /// Amplitude on |m m ... m>, m in {0,1,2}.
  Phase amplitude(int m) const { return Phase(q_ * m); }
  std::array<Phase, 3> amplitudes() const { return {amplitude(0), amplitude(1), amplitude(2)}; }
  static constexpr const char* normTag() { return "1/sqrt(3)"; }

  bool operator==(const GhzState&) const = default;

 private:
  int n_;
  int q_;
};

/// GHZ_k for N >= 3 and k in {0,1,2}.
GhzState ghzState(int n, int k);

/// Exact eigenvalue of the monomial word on the state, or nullopt when the
/// state is not an eigenvector. Throws InputError on a length mismatch.
std::optional<Cyclotomic> eigencheck(const ObservableWord& word, const GhzState& state,
                                     WVariant variant = WVariant::Conjugation);

/// Same check for weight * word.
std::optional<Cyclotomic> eigencheck(const ObservableWord& word, Phase weight, const GhzState& state,
                                     WVariant variant = WVariant::Conjugation);

/// Applies diag(1, a^m, a^2m) on each qutrit, m = increments[i].
GhzState rotateState(const GhzState& state, std::span<const int> increments);

/// Predicted eigenvalue omega^((t - k)/3) of a word with t rotation units on
/// GHZ_k, or nullopt when t is not congruent to k mod 3.
std::optional<Phase> predictedEigenvalue(int totalUnits, int k);

}  // namespace qmermin
