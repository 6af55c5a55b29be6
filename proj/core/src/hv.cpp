#include "qmermin/hv.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "eisenstein.hpp"
#include "qmermin/errors.hpp"

namespace qmermin {

namespace {

using Eis = detail::Eisenstein<std::int64_t>;
using CEis = detail::CheckedEisenstein;

int mod3(int v) { return ((v % 3) + 3) % 3; }

void requireK(int k) {
  if (k < 0 || k > 2) throw InputError("k must be 0, 1 or 2, got " + std::to_string(k));
}

double sqrtOf(Int v) { return std::sqrt(static_cast<double>(v)); }

void finish(HvOutcome& out) {
  const Int m = out.maxSquared();
  out.maxMagnitude = sqrtOf(m);
  out.quantumValue = quantumValue(out.n, out.k);
  out.ratioA = out.maxMagnitude > 0 ? static_cast<double>(out.quantumValue) / out.maxMagnitude : INFINITY;
  out.convention = conventionFor(out.n);
}

/// omega exponent of the weight for each Y-count, read off the operator's terms.
std::vector<std::optional<int>> weightsByYCount(const MerminOperator& op) {
  std::vector<std::optional<int>> w(static_cast<std::size_t>(op.n()) + 1);
  for (const auto& t : op.terms()) {
    auto& slot = w[static_cast<std::size_t>(t.word.count(Basis::Y))];
    const int e = t.weight.exponent() / 3;
    if (slot && *slot != e) throw std::logic_error("operator weight is not a function of the Y-count");
    slot = e;
  }
  return w;
}

std::vector<std::optional<int>> weightsFromFormula(int n, int k) {
  std::vector<std::optional<int>> w(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    if (mod3(j - k) == 0) w[static_cast<std::size_t>(j)] = termWeight(j, k).exponent() / 3;
  }
  return w;
}

struct Tally {
  Int best = -1;
  Int count = 0;
  std::vector<std::vector<std::uint8_t>> first;  // digits 0/1/2 = exponents 0/3/6

  void offer(Int value, const std::vector<std::uint8_t>& digits, std::size_t cap) {
    if (value > best) {
      best = value;
      count = 0;
      first.clear();
    }
    if (value == best) {
      ++count;
      if (first.size() < cap) first.push_back(digits);
    }
  }

  /// Merge a tally covering a lexicographically later range.
  void append(const Tally& later, std::size_t cap) {
    if (later.best > best) {
      *this = later;
    } else if (later.best == best) {
      count += later.count;
      for (const auto& d : later.first) {
        if (first.size() >= cap) break;
        first.push_back(d);
      }
    }
  }
};

RatioAssignment fromDigits(const std::vector<std::uint8_t>& digits, std::size_t rCount) {
  RatioAssignment ra;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    (i < rCount ? ra.r : ra.s).push_back(Phase::omega(digits[i]));
  }
  return ra;
}

// Depth-first enumeration of all R tuples with a given prefix, maintaining the
// elementary symmetric sums e_j(R_1..R_i) along the path.
class BruteSearch {
 public:
  BruteSearch(int n, std::vector<std::optional<int>> weights, std::size_t cap)
      : n_(n), weights_(std::move(weights)), cap_(cap),
        stack_(static_cast<std::size_t>(n) + 1, std::vector<Eis>(static_cast<std::size_t>(n) + 1)),
        digits_(static_cast<std::size_t>(n)) {}

  Tally run(const std::vector<std::uint8_t>& prefix) {
    Tally tally;
    std::fill(stack_[0].begin(), stack_[0].end(), Eis{});
    stack_[0][0] = {1, 0};
    for (std::size_t i = 0; i < prefix.size(); ++i) push(i, prefix[i]);
    descend(prefix.size(), tally);
    return tally;
  }

 private:
  void push(std::size_t depth, std::uint8_t d) {
    digits_[depth] = d;
    const auto& cur = stack_[depth];
    auto& next = stack_[depth + 1];
    next[0] = cur[0];
    for (std::size_t j = 1; j <= depth; ++j) next[j] = cur[j] + cur[j - 1].rotated(d);
    next[depth + 1] = cur[depth].rotated(d);
  }

  void descend(std::size_t depth, Tally& tally) {
    if (depth == static_cast<std::size_t>(n_)) {
      Eis v;
      const auto& e = stack_[depth];
      for (std::size_t j = 0; j < weights_.size(); ++j) {
        if (weights_[j]) v += e[j].rotated(*weights_[j]);
      }
      tally.offer(v.norm(), digits_, cap_);
      return;
    }
    for (std::uint8_t d = 0; d < 3; ++d) {
      push(depth, d);
      descend(depth + 1, tally);
    }
  }

  int n_;
  std::vector<std::optional<int>> weights_;
  std::size_t cap_;
  std::vector<std::vector<Eis>> stack_;
  std::vector<std::uint8_t> digits_;
};

Tally bruteTwoBasis(int n, const std::vector<std::optional<int>>& weights, const SearchOptions& options) {
  const int prefixLen = std::min(n, 3);
  std::size_t chunks = 1;
  for (int i = 0; i < prefixLen; ++i) chunks *= 3;

  std::vector<Tally> results(chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    BruteSearch search(n, weights, options.argmaxCap);
    for (std::size_t c = next++; c < chunks; c = next++) {
      std::vector<std::uint8_t> prefix(static_cast<std::size_t>(prefixLen));
      std::size_t rest = c;
      for (int i = prefixLen - 1; i >= 0; --i) {
        prefix[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rest % 3);
        rest /= 3;
      }
      results[c] = search.run(prefix);
    }
  };

  const int jobs = std::clamp(options.jobs, 1, static_cast<int>(chunks));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  Tally total;
  for (const auto& r : results) total.append(r, options.argmaxCap);
  return total;
}

// N = 3: all 729 (R, S) tuples, evaluated term by term.
Tally bruteThreeBasis(const MerminOperator& op, const SearchOptions& options) {
  Tally tally;
  std::vector<std::uint8_t> digits(6);
  for (int code = 0; code < 729; ++code) {
    int rest = code;
    for (int i = 5; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rest % 3);
      rest /= 3;
    }
    Eis v;
    for (const auto& t : op.terms()) {
      int e = t.weight.exponent() / 3;
      for (std::size_t i = 0; i < 3; ++i) {
        if (t.word[i] == Basis::X) e += digits[i];
        if (t.word[i] == Basis::W) e += digits[3 + i];
      }
      v += Eis{1, 0}.rotated(e);
    }
    tally.offer(v.norm(), digits, options.argmaxCap);
  }
  return tally;
}

std::vector<std::vector<Int>> binomialTable(int n) {
  std::vector<std::vector<Int>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) c[i][j] = checked::add(c[i - 1][j - 1], c[i - 1][j]);
  }
  return c;
}

}  // namespace

std::vector<int> RatioAssignment::exponents() const {
  std::vector<int> e;
  e.reserve(r.size() + s.size());
  for (Phase p : r) e.push_back(p.exponent());
  for (Phase p : s) e.push_back(p.exponent());
  return e;
}

RatioAssignment RatioAssignment::fromExponents(std::span<const int> r, std::span<const int> s) {
  RatioAssignment ra;
  for (int e : r) ra.r.emplace_back(e);
  for (int e : s) ra.s.emplace_back(e);
  return ra;
}

std::string toString(HvMethod m) {
  switch (m) {
    case HvMethod::Brute: return "brute";
    case HvMethod::Symmetric: return "symmetric";
    case HvMethod::Theorem: return "theorem";
  }
  return "unknown";
}

std::string toString(RatioConvention c) {
  return c == RatioConvention::YOverX ? "R_i = v(Y_i)/v(X_i)" : "R_i = v(X_i)/v(Y_i), S_i = v(W_i)/v(Y_i)";
}

RatioConvention conventionFor(int n) { return n == 3 ? RatioConvention::XOverYWOverY : RatioConvention::YOverX; }

std::string toString(TheoremModel m) {
  switch (m) {
    case TheoremModel::Uniform: return "uniform";
    case TheoremModel::SingleDeparture: return "single-departure";
    case TheoremModel::Tie: return "tie";
  }
  return "unknown";
}

Int HvOutcome::maxSquared() const {
  const auto v = maxMagnitudeSquared.asInteger();
  if (!v) throw std::logic_error("HV maximum |v|^2 is not a rational integer: " + maxMagnitudeSquared.str());
  return *v;
}

Cyclotomic hvValue(const MerminOperator& op, const HvAssignment& a) {
  const auto n = static_cast<std::size_t>(op.n());
  if (a.x.size() != n || a.y.size() != n) throw InputError("assignment needs X and Y values for every qutrit");
  if (op.usesThirdBasis() && a.w.size() != n) throw InputError("N = 3 assignment needs W values for every qutrit");
  for (const auto* values : {&a.x, &a.y, &a.w}) {
    for (Phase p : *values) {
      if (!p.isCubeRoot()) throw InputError("HV values must be cube roots of unity");
    }
  }
  Cyclotomic sum;
  for (const auto& t : op.terms()) {
    Phase p = t.weight;
    for (std::size_t i = 0; i < n; ++i) {
      switch (t.word[i]) {
        case Basis::X: p *= a.x[i]; break;
        case Basis::Y: p *= a.y[i]; break;
        case Basis::W: p *= a.w[i]; break;
      }
    }
    sum += Cyclotomic::from(p);
  }
  return sum;
}

Cyclotomic ratioValue(const MerminOperator& op, const RatioAssignment& ratios) {
  const auto n = static_cast<std::size_t>(op.n());
  if (ratios.r.size() != n) throw InputError("ratio assignment needs one R per qutrit");
  if (op.usesThirdBasis() && ratios.s.size() != n) throw InputError("N = 3 ratio assignment needs one S per qutrit");
  Cyclotomic sum;
  for (const auto& t : op.terms()) {
    Phase p = t.weight;
    for (std::size_t i = 0; i < n; ++i) {
      if (op.usesThirdBasis()) {
        if (t.word[i] == Basis::X) p *= ratios.r[i];
        if (t.word[i] == Basis::W) p *= ratios.s[i];
      } else if (t.word[i] == Basis::Y) {
        p *= ratios.r[i];
      }
    }
    sum += Cyclotomic::from(p);
  }
  return sum;
}

RatioAssignment inducedRatios(const HvAssignment& a, int n) {
  RatioAssignment ra;
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    if (n == 3) {
      ra.r.push_back(a.x[i] * a.y[i].inverse());
      ra.s.push_back(a.w.at(i) * a.y[i].inverse());
    } else {
      ra.r.push_back(a.y[i] * a.x[i].inverse());
    }
  }
  return ra;
}

HvOutcome hvMaxBrute(int n, int k, const SearchOptions& options) {
  requireK(k);
  if (n < 3) throw InputError("N must be >= 3, got " + std::to_string(n));
  const int limit = std::min(options.maxBruteN, kBruteHardLimit);
  if (n > limit) {
    throw GuardViolation("brute-force search limited to N <= " + std::to_string(limit) + ", got " + std::to_string(n));
  }
  const MerminOperator op = merminOperator(n, k);
  const Tally tally = n == 3 ? bruteThreeBasis(op, options) : bruteTwoBasis(n, weightsByYCount(op), options);

  HvOutcome out;
  out.n = n;
  out.k = k;
  out.method = HvMethod::Brute;
  out.maxMagnitudeSquared = Cyclotomic::integer(tally.best);
  out.argmaxCount = tally.count;
  for (const auto& d : tally.first) out.argmax.push_back(fromDigits(d, static_cast<std::size_t>(n)));
  finish(out);
  return out;
}

HvOutcome hvMaxSymmetric(int n, int k, const SearchOptions& options) {
  requireK(k);
  if (n < 4) throw InputError("symmetric search needs N >= 4, got " + std::to_string(n));
  if (n > kSymmetricLimit) throw GuardViolation("symmetric search limited to N <= " + std::to_string(kSymmetricLimit));

  const auto weights = weightsFromFormula(n, k);
  const auto binom = binomialTable(n);
  const auto un = static_cast<std::size_t>(n);

  // e_j of a multiset with n0 ones, n1 omegas, n2 omega^2s is the t^j
  // coefficient of (1 + t)^n0 (1 + omega t)^n1 (1 + omega^2 t)^n2.
  auto convolve = [&](const std::vector<CEis>& p, int m, int rot) {
    std::vector<CEis> out(un + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].a == 0 && p[i].b == 0) continue;
      for (int b = 0; b <= m && i + static_cast<std::size_t>(b) <= un; ++b) {
        out[i + static_cast<std::size_t>(b)] =
            out[i + static_cast<std::size_t>(b)] + p[i].scaled(binom[m][b]).rotated(rot * b);
      }
    }
    return out;
  };

  Int best = -1;
  std::vector<std::array<int, 3>> maximizers;
  for (int n1 = 0; n1 <= n; ++n1) {
    for (int n2 = 0; n1 + n2 <= n; ++n2) {
      const int n0 = n - n1 - n2;
      std::vector<CEis> poly(un + 1);
      for (int a = 0; a <= n0; ++a) poly[static_cast<std::size_t>(a)] = {binom[n0][a], 0};
      poly = convolve(convolve(poly, n1, 1), n2, 2);
      CEis v;
      for (std::size_t j = 0; j <= un; ++j) {
        if (weights[j]) v = v + poly[j].rotated(*weights[j]);
      }
      const Int m = v.norm();
      if (m > best) {
        best = m;
        maximizers.clear();
      }
      if (m == best) maximizers.push_back({n0, n1, n2});
    }
  }

  HvOutcome out;
  out.n = n;
  out.k = k;
  out.method = HvMethod::Symmetric;
  out.maxMagnitudeSquared = Cyclotomic::integer(best);

  Int count = 0;
  for (const auto& m : maximizers) count = checked::add(count, checked::mul(binom[n][m[0]], binom[n - m[0]][m[1]]));
  out.argmaxCount = count;

  // Lexicographically first tuples whose digit counts match some maximizing multiset.
  std::vector<std::uint8_t> digits(un);
  std::array<int, 3> used{0, 0, 0};
  std::vector<std::vector<std::uint8_t>> first;
  auto viable = [&] {
    return std::any_of(maximizers.begin(), maximizers.end(), [&](const std::array<int, 3>& m) {
      return used[0] <= m[0] && used[1] <= m[1] && used[2] <= m[2];
    });
  };
  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (first.size() >= options.argmaxCap) return;
    if (depth == un) {
      first.push_back(digits);
      return;
    }
    for (std::uint8_t d = 0; d < 3; ++d) {
      ++used[d];
      digits[depth] = d;
      if (viable()) self(self, depth + 1);
      --used[d];
    }
  };
  dfs(dfs, 0);
  for (const auto& d : first) out.argmax.push_back(fromDigits(d, un));
  finish(out);
  return out;
}

std::vector<int> theoremKSet(int n) {
  if (n < 4) throw InputError("theorem applies to N >= 4");
  if (n % 2 == 1) return {mod3(2 * n)};
  std::vector<int> ks{mod3(2 * n + 1), mod3(2 * n + 2)};
  std::sort(ks.begin(), ks.end());
  return ks;
}

HvOutcome hvMaxTheorem(int n, int k) {
  requireK(k);
  if (n < 4) throw InputError("theorem method needs N >= 4, got " + std::to_string(n));
  if (n > kSymmetricLimit) throw GuardViolation("theorem method limited to N <= " + std::to_string(kSymmetricLimit));
  const auto ks = theoremKSet(n);
  if (std::find(ks.begin(), ks.end(), k) == ks.end()) {
    throw InputError("theorem method does not cover k = " + std::to_string(k) + " at N = " + std::to_string(n));
  }

  // (1/3) sum_r lambda_r prod_i (1 + omega^r a^2 R_i), lambda = (1, omega^2k, omega^k).
  const std::array<Cyclotomic, 3> lambda{Cyclotomic::integer(1), Cyclotomic::omegaPow(2 * k), Cyclotomic::omegaPow(k)};
  const auto one = Cyclotomic::integer(1);
  auto factor = [&](int r, int ratioOmegaExp) { return one + Cyclotomic::alphaPow(3 * r + 2 + 3 * ratioOmegaExp); };

  Cyclotomic uniform3;
  Cyclotomic single3;
  for (int r = 0; r < 3; ++r) {
    const Cyclotomic base = factor(r, 0);
    uniform3 += lambda[r] * base.pow(static_cast<unsigned>(n));
    single3 += lambda[r] * factor(r, 1) * base.pow(static_cast<unsigned>(n - 1));
  }
  const auto uniformSq = uniform3.divExact(3).normSquared().asInteger();
  const auto singleSq = single3.divExact(3).normSquared().asInteger();
  if (!uniformSq || !singleSq) throw std::logic_error("closed-form HV magnitudes are not rational integers");

  TheoremDetail detail;
  detail.uniformSquared = *uniformSq;
  detail.singleDepartureSquared = *singleSq;
  detail.winner = *uniformSq > *singleSq   ? TheoremModel::Uniform
                  : *uniformSq < *singleSq ? TheoremModel::SingleDeparture
                                           : TheoremModel::Tie;
  if (n % 2 == 1) {
    const auto [a, b, c] = magnitudesABC();
    const double dn = n;
    detail.collinearUniform = (std::pow(a, dn) - std::pow(b, dn) - std::pow(c, dn)) / 3.0;
    detail.collinearSingleDeparture =
        (std::pow(a, dn - 1) * b + std::pow(b, dn - 1) * c - std::pow(c, dn - 1) * a) / 3.0;
  }

  HvOutcome out;
  out.n = n;
  out.k = k;
  out.method = HvMethod::Theorem;
  out.maxMagnitudeSquared = Cyclotomic::integer(std::max(*uniformSq, *singleSq));
  std::vector<int> uniformExp(static_cast<std::size_t>(n), 0);
  std::vector<int> departExp = uniformExp;
  departExp[0] = 3;
  if (detail.winner != TheoremModel::SingleDeparture) out.argmax.push_back(RatioAssignment::fromExponents(uniformExp));
  if (detail.winner != TheoremModel::Uniform) out.argmax.push_back(RatioAssignment::fromExponents(departExp));
  out.theorem = detail;
  finish(out);
  return out;
}

Magnitudes magnitudesABC() {
  constexpr double pi = std::numbers::pi;
  return {2.0 * std::cos(pi / 9.0), 2.0 * std::cos(2.0 * pi / 9.0), 2.0 * std::cos(4.0 * pi / 9.0)};
}

double collinearDifference(double n) {
  const auto [a, b, c] = magnitudesABC();
  const double uniform = std::pow(a, n) - std::pow(b, n) - std::pow(c, n);
  const double single = std::pow(a, n - 1) * b + std::pow(b, n - 1) * c - std::pow(c, n - 1) * a;
  return (uniform - single) / 3.0;
}

double crossoverN() {
  double lo = 9.0;
  double hi = 11.0;
  if (collinearDifference(lo) >= 0 || collinearDifference(hi) <= 0) {
    throw std::logic_error("collinear difference does not change sign on [9, 11]");
  }
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (collinearDifference(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Asymptotics asymptotics(int n) {
  if (n < 4) throw InputError("asymptotics need N >= 4");
  const double a = magnitudesABC().a;
  return {std::pow(a, n) / 3.0, 2.0 / a};
}

int compareRatios(std::int64_t q1, Int m1, std::int64_t q2, Int m2) {
  if (q1 == q2 && m1 == m2) return 0;
  try {
    const Int lhs = checked::mul(checked::mul(q1, q1), m2);
    const Int rhs = checked::mul(checked::mul(q2, q2), m1);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  } catch (const ArithmeticOverflow&) {
    const long double r1 = static_cast<long double>(q1) / std::sqrt(static_cast<long double>(m1));
    const long double r2 = static_cast<long double>(q2) / std::sqrt(static_cast<long double>(m2));
    return r1 < r2 ? -1 : (r1 > r2 ? 1 : 0);
  }
}

OptimalK optimalK(int n, const SearchOptions& options) {
  if (n < 3) throw InputError("N must be >= 3, got " + std::to_string(n));
  OptimalK out;
  out.n = n;
  for (int k = 0; k < 3; ++k) {
    out.perK.push_back(n == 3 ? hvMaxBrute(n, k, options) : hvMaxSymmetric(n, k, options));
  }
  int bestK = 0;
  for (int k = 1; k < 3; ++k) {
    const auto& a = out.perK[k];
    const auto& b = out.perK[bestK];
    if (compareRatios(a.quantumValue, a.maxSquared(), b.quantumValue, b.maxSquared()) > 0) bestK = k;
  }
  for (int k = 0; k < 3; ++k) {
    const auto& a = out.perK[k];
    const auto& b = out.perK[bestK];
    if (compareRatios(a.quantumValue, a.maxSquared(), b.quantumValue, b.maxSquared()) == 0) out.ks.push_back(k);
  }
  return out;
}

}  // namespace qmermin
