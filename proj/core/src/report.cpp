#include "qmermin/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "json_io.hpp"
#include "qmermin/ghz.hpp"
#include "qmermin/mermin.hpp"

namespace qmermin {

namespace {

using detail::Json;

std::string joinInts(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string exponentsStr(const RatioAssignment& a) {
  std::string s = "(";
  const auto e = a.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += i == a.r.size() ? "; " : ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

std::vector<int> kRange(const RunConfig& c) {
  if (c.k) return {*c.k};
  return {0, 1, 2};
}

SearchOptions searchOptions(const RunConfig& c) {
  SearchOptions o;
  o.jobs = c.jobs;
  o.maxBruteN = c.maxBruteN;
  return o;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::optional<int> envInt(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0') throw InputError(std::string("environment variable ") + name + " is not an integer");
  return static_cast<int>(v);
}

// Runs the requested methods for one (N, k); records disagreements.
std::vector<HvOutcome> outcomesFor(int n, int k, const RunConfig& c, std::vector<std::string>& problems) {
  const SearchOptions opts = searchOptions(c);
  std::vector<HvOutcome> out;
  if (n == 3) {
    // Only the exhaustive search covers the three-basis operators.
    out.push_back(hvMaxBrute(n, k, opts));
    return out;
  }
  switch (c.method) {
    case MethodSelection::Brute: out.push_back(hvMaxBrute(n, k, opts)); break;
    case MethodSelection::Symmetric: out.push_back(hvMaxSymmetric(n, k, opts)); break;
    case MethodSelection::Theorem: out.push_back(hvMaxTheorem(n, k)); break;
    case MethodSelection::All:
      if (n <= c.maxBruteN) out.push_back(hvMaxBrute(n, k, opts));
      out.push_back(hvMaxSymmetric(n, k, opts));
      if (contains(theoremKSet(n), k)) out.push_back(hvMaxTheorem(n, k));
      break;
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    const auto& a = out.front();
    const auto& b = out[i];
    if (a.maxMagnitudeSquared != b.maxMagnitudeSquared) {
      problems.push_back(fmt::format("N={} k={}: {} gives |v|^2 = {}, {} gives {}", n, k, toString(a.method),
                                     a.maxMagnitudeSquared.str(), toString(b.method), b.maxMagnitudeSquared.str()));
    }
    if (a.argmaxCount && b.argmaxCount && (*a.argmaxCount != *b.argmaxCount || a.argmax != b.argmax)) {
      problems.push_back(fmt::format("N={} k={}: {} and {} disagree on the maximizing assignments", n, k,
                                     toString(a.method), toString(b.method)));
    }
  }
  return out;
}

// Which k values the row covers for a given method.
std::vector<int> candidateKs(int n, const RunConfig& c) {
  if (c.k) {
    if (n >= 4 && c.method == MethodSelection::Theorem && !contains(theoremKSet(n), *c.k)) {
      throw InputError(fmt::format("theorem method does not cover k = {} at N = {}", *c.k, n));
    }
    return {*c.k};
  }
  if (n >= 4 && c.method == MethodSelection::Theorem) return theoremKSet(n);
  return {0, 1, 2};
}

struct Markdown {
  std::ostringstream out;
  void row(const std::vector<std::string>& cells) {
    out << "|";
    for (const auto& cell : cells) out << " " << cell << " |";
    out << "\n";
  }
  void header(const std::vector<std::string>& cells) {
    row(cells);
    out << "|";
    for (std::size_t i = 0; i < cells.size(); ++i) out << "---|";
    out << "\n";
  }
};

std::string csvLine(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ",";
    s += cells[i];
  }
  return s + "\n";
}

std::string fullDouble(double v) { return fmt::format("{}", v); }

}  // namespace

void RunConfig::validate() const {
  if (nMin <= nMax && nMin < 3) throw InputError(fmt::format("N must be >= 3, got --n-min {}", nMin));
  if (k && (*k < 0 || *k > 2)) throw InputError(fmt::format("k must be 0, 1 or 2, got {}", *k));
  if (jobs < 1) throw InputError("--jobs must be >= 1");
  if (maxBruteN < 3) throw InputError("--max-brute-n must be >= 3");
  if (maxBruteN > kBruteHardLimit) {
    throw GuardViolation(fmt::format("--max-brute-n may not exceed {}", kBruteHardLimit));
  }
  if (verifySamples < 1) throw InputError("verify sample count must be positive");
}

void applyEnvironmentOverrides(RunConfig& config) {
  if (auto v = envInt("QMERMIN_MAX_BRUTE_N")) config.maxBruteN = *v;
  if (auto v = envInt("QMERMIN_JOBS")) config.jobs = *v;
  if (auto v = envInt("QMERMIN_MAX_VERIFY_N")) config.maxVerifyExhaustiveN = *v;
}

std::optional<Int> exactSqrt(Int m) {
  if (m < 0) return std::nullopt;
  Int r = static_cast<Int>(std::llround(std::sqrt(static_cast<long double>(m))));
  while (r > 0 && r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  if (r * r == m) return r;
  return std::nullopt;
}

std::string surd(Int m) {
  if (auto r = exactSqrt(m)) return toString(*r);
  return "sqrt(" + toString(m) + ")";
}

std::vector<TableRow> buildTable(const RunConfig& config, std::vector<std::string>& problems) {
  config.validate();
  std::vector<TableRow> rows;
  for (int n = config.nMin; n <= config.nMax; ++n) {
    if (config.method == MethodSelection::Brute && n > config.maxBruteN) {
      throw GuardViolation(fmt::format("brute-force search limited to N <= {}, got {}", config.maxBruteN, n));
    }
    const auto ks = candidateKs(n, config);
    std::map<int, HvOutcome> primary;
    std::set<std::string> methods;
    for (int k : ks) {
      auto outs = outcomesFor(n, k, config, problems);
      for (const auto& o : outs) methods.insert(toString(o.method));
      primary.emplace(k, outs.front());
    }

    // k maximizing M_Q / M_HVM, exactly.
    int bestK = ks.front();
    for (int k : ks) {
      const auto& a = primary.at(k);
      const auto& b = primary.at(bestK);
      if (compareRatios(a.quantumValue, a.maxSquared(), b.quantumValue, b.maxSquared()) > 0) bestK = k;
    }
    TableRow row;
    row.n = n;
    for (int k : ks) {
      const auto& a = primary.at(k);
      const auto& b = primary.at(bestK);
      if (compareRatios(a.quantumValue, a.maxSquared(), b.quantumValue, b.maxSquared()) == 0) row.kSet.push_back(k);
    }
    const auto& best = primary.at(bestK);
    row.mQ = best.quantumValue;
    row.mHvmSquared = best.maxSquared();
    row.mHvmExact = surd(row.mHvmSquared);
    row.mHvm = best.maxMagnitude;
    row.ratioA = best.ratioA;
    row.methods.assign(methods.begin(), methods.end());

    if (config.method == MethodSelection::All && !config.k && n >= 4 && row.kSet != theoremKSet(n)) {
      problems.push_back(fmt::format("N={}: optimal k set {{{}}} differs from the theorem's k set {{{}}}", n,
                                     joinInts(row.kSet, ","), joinInts(theoremKSet(n), ",")));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string renderTable(const std::vector<TableRow>& rows, OutputFormat format, bool exactOnly) {
  switch (format) {
    case OutputFormat::Json: {
      Json table = Json::array();
      for (const auto& r : rows) table.push_back(detail::tableRowJson(r, exactOnly));
      return Json{{"table", table}}.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string s = csvLine({"N", "k_set", "M_Q", "M_HVM_squared", "M_HVM_float", "ratio_A"});
      for (const auto& r : rows) {
        s += csvLine({std::to_string(r.n), joinInts(r.kSet, ";"), std::to_string(r.mQ), toString(r.mHvmSquared),
                      exactOnly ? "" : fullDouble(r.mHvm), exactOnly ? "" : fullDouble(r.ratioA)});
      }
      return s;
    }
    case OutputFormat::Markdown: {
      Markdown md;
      if (exactOnly) {
        md.header({"N", "k", "M_Q", "M_HVM", "M_HVM^2"});
      } else {
        md.header({"N", "k", "M_Q", "M_HVM", "M_HVM^2", "M_HVM (float)", "A"});
      }
      for (const auto& r : rows) {
        std::vector<std::string> cells{std::to_string(r.n), joinInts(r.kSet, ","), std::to_string(r.mQ), r.mHvmExact,
                                       toString(r.mHvmSquared)};
        if (!exactOnly) {
          cells.push_back(fmt::format("{:.4f}", r.mHvm));
          cells.push_back(fmt::format("{:.2f}", r.ratioA));
        }
        md.row(cells);
      }
      return md.out.str();
    }
  }
  return {};
}

CommandResult tableCommand(const RunConfig& config) {
  return runGuarded([&] {
    std::vector<std::string> problems;
    const auto rows = buildTable(config, problems);
    CommandResult result;
    result.output = renderTable(rows, config.format, config.exactOnly);
    result.diagnostics = problems;
    if (!problems.empty()) result.code = ExitCode::MethodDisagreement;
    return result;
  });
}

namespace {

struct Check {
  std::string property;
  int n = 0;
  std::optional<int> k;
  bool pass = true;
  std::string detail;
};

// Eigenvalue and periodicity checks for one list of weighted terms.
void checkTerms(const std::vector<MerminTerm>& terms, const GhzState& ghz, WVariant variant, int k, Check& eigen,
                Check& periodicity) {
  std::size_t eigenFailures = 0;
  std::size_t periodicityFailures = 0;
  const auto one = Cyclotomic::integer(1);
  for (const auto& t : terms) {
    const auto weighted = eigencheck(t.word, t.weight, ghz, variant);
    if (!weighted || *weighted != one) ++eigenFailures;
    const auto bare = eigencheck(t.word, ghz, variant);
    const auto predicted = predictedEigenvalue(t.word.totalUnits(), k);
    if (!bare || !predicted || *bare != Cyclotomic::from(*predicted)) ++periodicityFailures;
  }
  eigen.pass = eigenFailures == 0;
  eigen.detail = fmt::format("{} terms, {} failures", terms.size(), eigenFailures);
  periodicity.pass = periodicityFailures == 0;
  periodicity.detail = fmt::format("{} words, {} failures", terms.size(), periodicityFailures);
}

std::string renderChecks(const std::vector<Check>& checks, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      Json arr = Json::array();
      bool all = true;
      for (const auto& c : checks) {
        all = all && c.pass;
        arr.push_back({{"property", c.property},
                       {"N", c.n},
                       {"k", c.k ? Json(*c.k) : Json(nullptr)},
                       {"pass", c.pass},
                       {"detail", c.detail}});
      }
      return Json{{"checks", arr}, {"allPass", all}}.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string s = csvLine({"property", "N", "k", "status", "detail"});
      for (const auto& c : checks) {
        s += csvLine({c.property, std::to_string(c.n), c.k ? std::to_string(*c.k) : "", c.pass ? "pass" : "FAIL",
                      c.detail});
      }
      return s;
    }
    case OutputFormat::Markdown: {
      Markdown md;
      md.header({"property", "N", "k", "status", "detail"});
      for (const auto& c : checks) {
        md.row({c.property, std::to_string(c.n), c.k ? std::to_string(*c.k) : "-", c.pass ? "pass" : "FAIL", c.detail});
      }
      return md.out.str();
    }
  }
  return {};
}

inline constexpr int kMaxVerifyN = 40;

}  // namespace

CommandResult verifyCommand(const RunConfig& config) {
  return runGuarded([&] {
    config.validate();
    if (config.nMax > kMaxVerifyN) throw GuardViolation(fmt::format("verify limited to N <= {}", kMaxVerifyN));
    std::vector<Check> checks;
    for (int n = config.nMin; n <= config.nMax; ++n) {
      const bool exhaustive = n <= config.maxVerifyExhaustiveN || n == 3;
      if (exhaustive) {
        Check partition{"partition", n, std::nullopt, true, ""};
        std::set<std::string> seen;
        std::size_t total = 0;
        for (int k = 0; k < 3; ++k) {
          for (const auto& w : concurrentSet(n, k)) {
            ++total;
            seen.insert(w.str());
          }
        }
        const std::size_t expected = n == 3 ? 27 : (std::size_t{1} << n);
        partition.pass = total == expected && seen.size() == expected;
        partition.detail = fmt::format("{} words in three sets, {} distinct, {} expected", total, seen.size(), expected);
        checks.push_back(partition);
      }
      for (int k : kRange(config)) {
        const GhzState ghz = ghzState(n, k);
        Check eigen{"eigenstate", n, k, true, ""};
        Check periodicity{"periodicity", n, k, true, ""};
        if (exhaustive) {
          const MerminOperator op = merminOperator(n, k);
          checkTerms(op.terms(), ghz, config.wVariant, k, eigen, periodicity);
          checks.push_back(eigen);
          checks.push_back(periodicity);

          Check whole{"operator-eigenvalue", n, k, true, ""};
          const auto image = applyOperator(op, ghz, config.wVariant);
          const auto q = Cyclotomic::integer(op.quantumValue());
          whole.pass = image.has_value();
          for (int m = 0; whole.pass && m < 3; ++m) {
            whole.pass = (*image)[m] == q * ghz.amplitude(m);
          }
          whole.detail = fmt::format("M_k GHZ_k = {} GHZ_k expected", op.quantumValue());
          checks.push_back(whole);

          Check count{"quantum-value", n, k, true, ""};
          count.pass = op.quantumValue() == quantumValue(n, k);
          count.detail = fmt::format("{} terms", op.quantumValue());
          if (n == 3) {
            count.pass = count.pass && op.quantumValue() == 9;
          } else if (contains(theoremKSet(n), k)) {
            count.pass = count.pass && op.quantumValue() == tableQuantumValue(n);
            count.detail += fmt::format(", formula {}", tableQuantumValue(n));
          }
          checks.push_back(count);
        } else {
          const auto terms = sampleTerms(n, k, config.verifySamples, 0x5eed0000ULL + static_cast<std::uint64_t>(n * 3 + k));
          checkTerms(terms, ghz, config.wVariant, k, eigen, periodicity);
          eigen.detail += " (sampled)";
          periodicity.detail += " (sampled)";
          checks.push_back(eigen);
          checks.push_back(periodicity);
        }
        if (n >= 4 && n <= 20) {
          const auto report = closedFormCheck(n, k);
          Check cf{"closed-form", n, k, report.ok, ""};
          int nonzero = 0;
          for (const auto& e : report.entries) nonzero += e.coefficientTimesThree.isZero() ? 0 : 1;
          cf.detail = fmt::format("{} Y-counts with nonzero coefficient", nonzero);
          checks.push_back(cf);
        }
      }
    }
    CommandResult result;
    result.output = renderChecks(checks, config.format);
    for (const auto& c : checks) {
      if (!c.pass) {
        result.code = ExitCode::VerificationFailure;
        result.diagnostics.push_back(fmt::format("{} failed at N={}{}: {}", c.property, c.n,
                                                 c.k ? fmt::format(" k={}", *c.k) : "", c.detail));
      }
    }
    return result;
  });
}

CommandResult hvmaxCommand(const RunConfig& config) {
  return runGuarded([&] {
    config.validate();
    std::vector<std::string> problems;
    std::vector<HvOutcome> outcomes;
    for (int n = config.nMin; n <= config.nMax; ++n) {
      if (config.method == MethodSelection::Brute && n > config.maxBruteN) {
        throw GuardViolation(fmt::format("brute-force search limited to N <= {}, got {}", config.maxBruteN, n));
      }
      for (int k : candidateKs(n, config)) {
        for (auto& o : outcomesFor(n, k, config, problems)) outcomes.push_back(std::move(o));
      }
    }
    CommandResult result;
    switch (config.format) {
      case OutputFormat::Json: {
        Json arr = Json::array();
        for (const auto& o : outcomes) arr.push_back(detail::outcomeJson(o, config.exactOnly));
        result.output = Json{{"outcomes", arr}}.dump(2) + "\n";
        break;
      }
      case OutputFormat::Csv: {
        result.output = csvLine({"N", "k", "method", "M_Q", "M_HVM_squared", "M_HVM_float", "ratio_A", "argmax_count",
                                 "argmax_first"});
        for (const auto& o : outcomes) {
          result.output += csvLine({std::to_string(o.n), std::to_string(o.k), toString(o.method),
                                    std::to_string(o.quantumValue), toString(o.maxSquared()),
                                    config.exactOnly ? "" : fullDouble(o.maxMagnitude),
                                    config.exactOnly ? "" : fullDouble(o.ratioA),
                                    o.argmaxCount ? toString(*o.argmaxCount) : "",
                                    o.argmax.empty() ? "" : "\"" + exponentsStr(o.argmax.front()) + "\""});
        }
        break;
      }
      case OutputFormat::Markdown: {
        Markdown md;
        md.header({"N", "k", "method", "M_Q", "M_HVM", "M_HVM^2", "A", "maximizers", "first maximizers (phase exponents)"});
        for (const auto& o : outcomes) {
          std::string first;
          for (std::size_t i = 0; i < o.argmax.size() && i < 3; ++i) first += (i ? " " : "") + exponentsStr(o.argmax[i]);
          md.row({std::to_string(o.n), std::to_string(o.k), toString(o.method), std::to_string(o.quantumValue),
                  surd(o.maxSquared()), toString(o.maxSquared()), fmt::format("{:.4f}", o.ratioA),
                  o.argmaxCount ? toString(*o.argmaxCount) : "-", first});
        }
        md.out << "\nRatio convention: " << toString(RatioConvention::YOverX) << " for N >= 4; "
               << toString(RatioConvention::XOverYWOverY) << " for N = 3.\n";
        result.output = md.out.str();
        break;
      }
    }
    result.diagnostics = problems;
    if (!problems.empty()) result.code = ExitCode::MethodDisagreement;
    return result;
  });
}

CommandResult qubitCommand(const RunConfig& config) {
  return runGuarded([&] {
    config.validate();
    const auto [a, b, c] = magnitudesABC();
    (void)b;
    (void)c;
    struct Row {
      QubitComparison d2;
      bool kIndependent;
      std::vector<int> d3Ks;
      double d3Ratio;
    };
    std::vector<Row> rows;
    for (int n = config.nMin; n <= config.nMax; ++n) {
      const auto q0 = qubitComparison(n, 0);
      const auto q1 = qubitComparison(n, 1);
      const auto best = optimalK(n, searchOptions(config));
      rows.push_back({q0, q0.quantumValue == q1.quantumValue && q0.hvMaxSquared == q1.hvMaxSquared, best.ks,
                      best.perK[best.ks.front()].ratioA});
    }
    CommandResult result;
    const double qubitBase = std::sqrt(2.0);
    const double qutritBase = 2.0 / a;
    switch (config.format) {
      case OutputFormat::Json: {
        Json arr = Json::array();
        for (const auto& r : rows) {
          arr.push_back({{"N", r.d2.n},
                         {"d2_M_Q", r.d2.quantumValue},
                         {"d2_M_HVM_squared", r.d2.hvMaxSquared},
                         {"d2_ratio", r.d2.ratio},
                         {"d2_reference_ratio", r.d2.referenceRatio},
                         {"d2_matches_reference", r.d2.matchesReference},
                         {"d2_k_independent", r.kIndependent},
                         {"d3_k_set", r.d3Ks},
                         {"d3_ratio", r.d3Ratio}});
        }
        result.output = Json{{"rows", arr}, {"growthBase", {{"d2", qubitBase}, {"d3", qutritBase}}}}.dump(2) + "\n";
        break;
      }
      case OutputFormat::Csv: {
        result.output = csvLine({"N", "d2_M_Q", "d2_M_HVM_squared", "d2_ratio", "d2_reference_ratio",
                                 "d2_matches_reference", "d3_k_set", "d3_ratio"});
        for (const auto& r : rows) {
          result.output += csvLine({std::to_string(r.d2.n), std::to_string(r.d2.quantumValue),
                                    std::to_string(r.d2.hvMaxSquared), fullDouble(r.d2.ratio),
                                    fullDouble(r.d2.referenceRatio), r.d2.matchesReference ? "true" : "false",
                                    joinInts(r.d3Ks, ";"), fullDouble(r.d3Ratio)});
        }
        break;
      }
      case OutputFormat::Markdown: {
        Markdown md;
        md.header({"N", "d=2 M_Q", "d=2 M_HVM", "d=2 A", "2^(N/2) or 2^((N-1)/2)", "match", "d=3 k", "d=3 A"});
        for (const auto& r : rows) {
          md.row({std::to_string(r.d2.n), std::to_string(r.d2.quantumValue), surd(r.d2.hvMaxSquared),
                  fmt::format("{:.4g}", r.d2.ratio), fmt::format("{:.4g}", r.d2.referenceRatio),
                  r.d2.matchesReference ? "yes" : "no", joinInts(r.d3Ks, ","), fmt::format("{:.2f}", r.d3Ratio)});
        }
        md.out << fmt::format("\nGrowth base of A: d=2 {:.4f}, d=3 {:.4f}\n", qubitBase, qutritBase);
        result.output = md.out.str();
        break;
      }
    }
    return result;
  });
}

CommandResult n3Command(const RunConfig& config) {
  return runGuarded([&] {
    RunConfig c = config;
    c.nMin = 3;
    c.nMax = 3;
    c.validate();
    const SearchOptions opts = searchOptions(c);
    Json perK = Json::array();
    Markdown md;
    bool allEigen = true;
    for (int k : kRange(c)) {
      const MerminOperator op = merminOperator(3, k);
      const GhzState ghz = ghzState(3, k);
      Json terms = Json::array();
      std::size_t failures = 0;
      std::string listing;
      for (const auto& t : op.terms()) {
        const auto ev = eigencheck(t.word, t.weight, ghz, c.wVariant);
        const bool ok = ev && *ev == Cyclotomic::integer(1);
        failures += ok ? 0 : 1;
        EigencheckReport rep{t.word, k, t.weight, ev};
        terms.push_back(detail::eigencheckJson(rep));
        const int w = t.weight.exponent() / 3;
        listing += (listing.empty() ? "" : " + ") + std::string(w == 0 ? "" : (w == 1 ? "w " : "w^2 ")) + t.word.str();
      }
      allEigen = allEigen && failures == 0;
      const HvOutcome hv = hvMaxBrute(3, k, opts);
      const RatioAssignment uniform = RatioAssignment::fromExponents(std::vector<int>{0, 0, 0}, std::vector<int>{0, 0, 0});
      const auto uniformSq = ratioValue(op, uniform).normSquared().asInteger().value_or(-1);
      perK.push_back({{"k", k},
                      {"operator", detail::operatorJson(op)},
                      {"eigenchecks", terms},
                      {"hv", detail::outcomeJson(hv, c.exactOnly)},
                      {"uniformMagnitudeSquared", detail::intJson(uniformSq)}});

      md.out << fmt::format("## k = {}\n\nM_{} = {}\n\n", k, k, listing);
      md.out << fmt::format("- eigenvalue 1 on GHZ_{} for every weighted term: {}\n", k, failures == 0 ? "yes" : "NO");
      md.out << fmt::format("- M_Q = {}, M_HVM = {} (|v|^2 = {}), A = {:.2f}\n", op.quantumValue(), surd(hv.maxSquared()),
                            toString(hv.maxSquared()), hv.ratioA);
      md.out << fmt::format("- maximizing (R; S) tuples: {} of 729; uniform ratios give |v|^2 = {}\n",
                            toString(*hv.argmaxCount), toString(uniformSq));
      std::string first;
      for (const auto& a : hv.argmax) first += " " + exponentsStr(a);
      md.out << "- first maximizers (phase exponents):" << first << "\n\n";
    }
    md.out << "Ratio convention: " << toString(RatioConvention::XOverYWOverY) << "\n";

    CommandResult result;
    switch (c.format) {
      case OutputFormat::Json:
        result.output = Json{{"N", 3}, {"convention", toString(RatioConvention::XOverYWOverY)}, {"perK", perK}}.dump(2) + "\n";
        break;
      case OutputFormat::Csv: {
        result.output = csvLine({"k", "M_Q", "M_HVM_squared", "maximizers", "uniform_squared"});
        for (const auto& entry : perK) {
          result.output += csvLine({std::to_string(entry["k"].get<int>()),
                                    std::to_string(entry["operator"]["quantumValue"].get<std::int64_t>()),
                                    entry["hv"]["maxMagnitudeSquared"].dump(), entry["hv"]["argmaxCount"].dump(),
                                    entry["uniformMagnitudeSquared"].dump()});
        }
        break;
      }
      case OutputFormat::Markdown: result.output = md.out.str(); break;
    }
    if (!allEigen) {
      result.code = ExitCode::VerificationFailure;
      result.diagnostics.push_back("N=3 eigencheck failed for at least one weighted term");
    }
    return result;
  });
}

}  // namespace qmermin
