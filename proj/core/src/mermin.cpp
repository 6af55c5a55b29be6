#include "qmermin/mermin.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>

#include "qmermin/errors.hpp"

namespace qmermin {

namespace {

void requireNk(int n, int k, int minN = 3) {
  if (n < minN) throw InputError("N must be >= " + std::to_string(minN) + ", got " + std::to_string(n));
  if (k < 0 || k > 2) throw InputError("k must be 0, 1 or 2, got " + std::to_string(k));
}

int mod3(int v) { return ((v % 3) + 3) % 3; }

std::int64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::int64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

// Mixed-radix enumeration of all words over `alphabet`, leftmost label most significant.
template <typename Fn>
void forEachWord(int n, std::span<const Basis> alphabet, Fn&& fn) {
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  std::vector<Basis> labels(static_cast<std::size_t>(n), alphabet[0]);
  while (true) {
    fn(labels);
    int pos = n - 1;
    while (pos >= 0 && ++digits[pos] == alphabet.size()) {
      digits[pos] = 0;
      labels[pos] = alphabet[0];
      --pos;
    }
    if (pos < 0) return;
    labels[pos] = alphabet[digits[pos]];
  }
}

constexpr std::array<Basis, 2> kTwoBases{Basis::X, Basis::Y};
constexpr std::array<Basis, 3> kThreeBases{Basis::X, Basis::Y, Basis::W};

inline constexpr int kMaxOperatorN = 24;

}  // namespace

MerminOperator::MerminOperator(int n, int k, std::vector<MerminTerm> terms)
    : n_(n), k_(k), terms_(std::move(terms)) {}

Phase termWeight(int totalUnits, int k) {
  const int diff = totalUnits - k;
  if (mod3(diff) != 0) throw InputError("word is not on the triangle of k = " + std::to_string(k));
  return Phase::omega(-diff / 3);
}

std::vector<ObservableWord> concurrentSet(int n, int k) {
  requireNk(n, k);
  if (n > kMaxOperatorN) throw GuardViolation("operator construction limited to N <= " + std::to_string(kMaxOperatorN));
  std::vector<ObservableWord> out;
  const std::span<const Basis> alphabet =
      n == 3 ? std::span<const Basis>(kThreeBases) : std::span<const Basis>(kTwoBases);
  forEachWord(n, alphabet, [&](const std::vector<Basis>& labels) {
    int units = 0;
    for (Basis b : labels) units += rotationUnits(b);
    if (mod3(units - k) == 0) out.emplace_back(labels);
  });
  std::sort(out.begin(), out.end(), [](const ObservableWord& a, const ObservableWord& b) { return a.str() < b.str(); });
  return out;
}

MerminOperator merminOperator(int n, int k) {
  std::vector<MerminTerm> terms;
  for (auto& w : concurrentSet(n, k)) {
    const Phase weight = termWeight(w.totalUnits(), k);
    terms.push_back({std::move(w), weight});
  }
  return MerminOperator(n, k, std::move(terms));
}

std::vector<MerminTerm> sampleTerms(int n, int k, int count, std::uint64_t seed) {
  requireNk(n, k, 4);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<MerminTerm> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<Basis> labels(static_cast<std::size_t>(n));
  while (static_cast<int>(out.size()) < count) {
    for (auto& b : labels) b = coin(rng) ? Basis::Y : Basis::X;
    ObservableWord w(labels);
    if (mod3(w.totalUnits() - k) != 0) continue;
    const Phase weight = termWeight(w.totalUnits(), k);
    out.push_back({std::move(w), weight});
  }
  return out;
}

std::int64_t quantumValue(int n, int k) {
  requireNk(n, k);
  if (n == 3) {
    // Words over {X,Y,W} of length 3 with t = k (mod 3): a third of 27.
    std::int64_t count = 0;
    for (int x = 0; x <= 3; ++x) {
      for (int y = 0; x + y <= 3; ++y) {
        const int w = 3 - x - y;
        if (mod3(y + 2 * w - k) != 0) continue;
        count += binomial(3, x) * binomial(3 - x, y);
      }
    }
    return count;
  }
  if (n > 62) throw GuardViolation("quantum value limited to N <= 62");
  std::int64_t count = 0;
  for (int j = 0; j <= n; ++j) {
    if (mod3(j - k) == 0) count += binomial(n, j);
  }
  return count;
}

std::int64_t tableQuantumValue(int n) {
  if (n < 3 || n > 62) throw InputError("N out of range for quantum value formula");
  const std::int64_t p = std::int64_t{1} << n;
  return n % 2 == 0 ? (p - 1) / 3 : (p - 2) / 3;
}

std::optional<std::array<Cyclotomic, 3>> applyOperator(const MerminOperator& op, const GhzState& state,
                                                       WVariant variant) {
  if (op.n() != state.n()) throw InputError("operator and state sizes differ");
  std::array<Cyclotomic, 3> out{};
  for (int m = 0; m < 3; ++m) {
    const BasisState support(static_cast<std::size_t>(state.n()), static_cast<std::uint8_t>(m));
    for (const auto& term : op.terms()) {
      const WordAction act = applyWord(term.word, support, variant);
      const auto target = act.image.front();
      if (std::any_of(act.image.begin(), act.image.end(), [&](auto v) { return v != target; })) return std::nullopt;
      out[target] += Cyclotomic::from(term.weight * act.phase * state.amplitude(m));
    }
  }
  return out;
}

ClosedFormReport closedFormCheck(int n, int k) {
  requireNk(n, k, 4);
  if (n > 20) throw GuardViolation("closed-form check limited to N <= 20");

  // Coefficients of the three binomial expansions and their Y factors.
  const std::array<Cyclotomic, 3> prefactor{Cyclotomic::integer(1), Cyclotomic::omegaPow(2 * k),
                                            Cyclotomic::omegaPow(k)};
  const std::array<Cyclotomic, 3> yFactor{Cyclotomic::alphaPow(2), Cyclotomic::alphaPow(3 + 2),
                                          Cyclotomic::alphaPow(6 + 2)};

  ClosedFormReport report;
  report.n = n;
  report.k = k;
  report.entries.resize(static_cast<std::size_t>(n) + 1);

  std::array<Cyclotomic, 3> yPower{Cyclotomic::integer(1), Cyclotomic::integer(1), Cyclotomic::integer(1)};
  for (int j = 0; j <= n; ++j) {
    auto& e = report.entries[static_cast<std::size_t>(j)];
    e.yCount = j;
    e.words = binomial(n, j);
    for (int r = 0; r < 3; ++r) e.coefficientTimesThree += prefactor[r] * yPower[r];
    for (int r = 0; r < 3; ++r) yPower[r] *= yFactor[r];
  }

  // Each {X,Y}-word appears once in the expansion with coefficient
  // (1/3) sum_r prefactor_r * yFactor_r^j; compare with the constructed weights.
  std::map<std::string, Phase> weights;
  const MerminOperator op = merminOperator(n, k);
  for (const auto& t : op.terms()) weights.emplace(t.word.str(), t.weight);

  std::vector<bool> entryOk(report.entries.size(), true);
  std::vector<bool> entrySeen(report.entries.size(), false);
  const Cyclotomic overall = Cyclotomic::alphaPow(2 * k) * Cyclotomic::integer(3);
  forEachWord(n, kTwoBases, [&](const std::vector<Basis>& labels) {
    const ObservableWord w(labels);
    const auto j = static_cast<std::size_t>(w.count(Basis::Y));
    auto& e = report.entries[j];
    const auto it = weights.find(w.str());
    const Cyclotomic expected = it == weights.end() ? Cyclotomic() : overall * it->second;
    if (!entrySeen[j]) {
      e.expected = expected;
      entrySeen[j] = true;
    }
    if (e.coefficientTimesThree != expected || e.expected != expected) entryOk[j] = false;
  });

  report.ok = true;
  for (std::size_t j = 0; j < report.entries.size(); ++j) {
    report.entries[j].ok = entryOk[j];
    report.ok = report.ok && entryOk[j];
  }
  return report;
}

namespace {

// Gaussian integer re + i*im.
struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;
  Gaussian operator+(Gaussian o) const { return {re + o.re, im + o.im}; }
  Gaussian operator*(Gaussian o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  bool operator==(const Gaussian&) const = default;
  std::int64_t norm() const { return re * re + im * im; }
};

Gaussian iPow(int j) {
  switch (((j % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

QubitComparison qubitComparison(int n, int k) {
  if (n < 3) throw InputError("N must be >= 3, got " + std::to_string(n));
  if (k < 0 || k > 1) throw InputError("qubit k must be 0 or 1, got " + std::to_string(k));
  if (n > kMaxQubitN) throw GuardViolation("qubit comparison limited to N <= " + std::to_string(kMaxQubitN));

  QubitComparison out;
  out.n = n;
  out.k = k;

  // Quantum value: apply every term i^j * (Y on the chosen sites, X elsewhere)
  // to |0..0> + c|1..1>, c^2 = (-1)^k. X|b> = |1-b>, Y|b> = i(-1)^b |1-b>.
  const Gaussian c = k == 0 ? Gaussian{1, 0} : Gaussian{0, 1};
  Gaussian onZeros;  // coefficient landing on |0..0>
  Gaussian onOnes;   // coefficient landing on |1..1>
  const std::uint64_t words = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < words; ++mask) {
    const int j = __builtin_popcountll(mask);
    if ((j - k) % 2 != 0) continue;
    const Gaussian coeff = iPow(j);
    // From |0..0> every Y contributes i; from |1..1> every Y contributes -i.
    onOnes = onOnes + coeff * iPow(j);
    onZeros = onZeros + coeff * c * iPow(-j);
  }
  // Eigenvector: onZeros = lambda * 1 and onOnes = lambda * c.
  const Gaussian lambda = onZeros;
  if (!(lambda * c == onOnes)) throw std::logic_error("qubit GHZ state is not an eigenvector");
  out.quantumValue = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(lambda.norm()))));

  // Hidden values: magnitude depends only on R_i = v(Y_i)/v(X_i) in {+1,-1}.
  // The (1/2)(1 + (-1)^{j+k}) factor leaves coefficient i^j on every word with
  // j = k (mod 2), so v = sum_j i^j e_j(R).
  std::int64_t best = -1;
  std::vector<Gaussian> e(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t signs = 0; signs < words; ++signs) {
    std::fill(e.begin(), e.end(), Gaussian{});
    e[0] = {1, 0};
    for (int i = 0; i < n; ++i) {
      const std::int64_t r = (signs >> i) & 1U ? -1 : 1;
      for (int j = i + 1; j >= 1; --j) e[j] = e[j] + Gaussian{r * e[j - 1].re, r * e[j - 1].im};
    }
    Gaussian v;
    for (int j = 0; j <= n; ++j) {
      if ((j - k) % 2 == 0) v = v + iPow(j) * e[j];
    }
    best = std::max(best, v.norm());
  }
  out.hvMaxSquared = best;
  out.hvMax = std::sqrt(static_cast<double>(best));
  out.ratio = static_cast<double>(out.quantumValue) / out.hvMax;

  const int exponent2 = n % 2 == 0 ? n : n - 1;  // reference ratio squared = 2^exponent2
  out.referenceRatio = std::ldexp(1.0, exponent2 / 2) * (exponent2 % 2 ? std::sqrt(2.0) : 1.0);
  const Int q2 = static_cast<Int>(out.quantumValue) * out.quantumValue;
  out.matchesReference = q2 == (static_cast<Int>(1) << exponent2) * static_cast<Int>(best);
  return out;
}

}  // namespace qmermin
