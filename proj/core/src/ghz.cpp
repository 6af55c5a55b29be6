#include "qmermin/ghz.hpp"

#include <numeric>

#include "qmermin/errors.hpp"

namespace qmermin {

GhzState::GhzState(int n, int phaseIndex) : n_(n), q_(((phaseIndex % 9) + 9) % 9) {
  if (n < 1) throw InputError("GHZ state needs at least one qutrit");
}

GhzState ghzState(int n, int k) {
  if (n < 3) throw InputError("GHZ state requires N >= 3, got " + std::to_string(n));
  if (k < 0 || k > 2) throw InputError("GHZ index k must be 0, 1 or 2, got " + std::to_string(k));
  return GhzState(n, k);
}

std::optional<Cyclotomic> eigencheck(const ObservableWord& word, const GhzState& state, WVariant variant) {
  return eigencheck(word, Phase::one(), state, variant);
}

std::optional<Cyclotomic> eigencheck(const ObservableWord& word, Phase weight, const GhzState& state,
                                     WVariant variant) {
  if (word.size() != static_cast<std::size_t>(state.n())) {
    throw InputError("word length " + std::to_string(word.size()) + " does not match N = " +
                     std::to_string(state.n()));
  }
  // image[m'] collects the coefficient landing on |m' .. m'>.
  std::array<std::optional<Phase>, 3> image{};
  for (int m = 0; m < 3; ++m) {
    const BasisState support(state.n(), static_cast<std::uint8_t>(m));
    const WordAction act = applyWord(word, support, variant);
    const auto target = act.image.front();
    for (auto v : act.image) {
      if (v != target) return std::nullopt;
    }
    if (image[target]) return std::nullopt;  // two support states collide
    image[target] = weight * act.phase * state.amplitude(m);
  }
  std::optional<Phase> ratio;
  for (int m = 0; m < 3; ++m) {
    const Phase r = *image[m] * state.amplitude(m).inverse();
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  return Cyclotomic::from(*ratio);
}

GhzState rotateState(const GhzState& state, std::span<const int> increments) {
  if (increments.size() != static_cast<std::size_t>(state.n())) {
    throw InputError("rotation needs one increment per qutrit");
  }
  // Each qutrit contributes a^(m_i * n) on |n .. n>; only the total matters.
  int total = 0;
  for (int m : increments) total = (total + (m % 9) + 9) % 9;
  return GhzState(state.n(), state.phaseIndex() + total);
}

std::optional<Phase> predictedEigenvalue(int totalUnits, int k) {
  const int diff = totalUnits - k;
  if (((diff % 3) + 3) % 3 != 0) return std::nullopt;
  return Phase::omega(diff / 3);
}

}  // namespace qmermin
