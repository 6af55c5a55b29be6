#pragma once

// Command implementations behind the qmermin CLI: M_Q / M_HVM table,
// verification suites, HV maximization streams and the qubit comparison.
// Each command returns its rendered output and an exit code; nothing here
// writes to stdout directly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmermin/cyclotomic.hpp"
#include "qmermin/errors.hpp"
#include "qmermin/hv.hpp"
#include "qmermin/pauli.hpp"

namespace qmermin {

enum class OutputFormat { Json, Csv, Markdown };
enum class MethodSelection { Brute, Symmetric, Theorem, All };

/// Process exit codes shared by every subcommand.
enum class ExitCode : int {
  Success = 0,
  InputError = 2,
  GuardViolation = 3,
  VerificationFailure = 4,
  MethodDisagreement = 5,
};

struct RunConfig {
  int nMin = 4;
  int nMax = 13;
  std::optional<int> k;  ///< nullopt: all k (auto selection)
  MethodSelection method = MethodSelection::All;
  OutputFormat format = OutputFormat::Markdown;
  WVariant wVariant = WVariant::Conjugation;
  bool exactOnly = false;
  int jobs = 1;
  int maxBruteN = 12;
  int maxVerifyExhaustiveN = 16;  ///< above this, verify samples terms
  int verifySamples = 2000;

  /// Throws InputError for inconsistent settings.
  void validate() const;
};

/// Reads QMERMIN_MAX_BRUTE_N, QMERMIN_JOBS and QMERMIN_MAX_VERIFY_N into a config.
void applyEnvironmentOverrides(RunConfig& config);

struct TableRow {
  int n = 0;
  std::vector<int> kSet;
  std::int64_t mQ = 0;
  Int mHvmSquared = 0;
  std::string mHvmExact;  ///< "7" or "sqrt(13)"
  double mHvm = 0.0;
  double ratioA = 0.0;
  std::vector<std::string> methods;  ///< methods that produced / confirmed the row
};

struct CommandResult {
  ExitCode code = ExitCode::Success;
  std::string output;
  std::vector<std::string> diagnostics;  ///< human-readable notes for stderr
};

/// Integer when m is a perfect square, otherwise "sqrt(m)".
std::string surd(Int m);

/// Exact integer square root when m is a perfect square.
std::optional<Int> exactSqrt(Int m);

/// Builds table rows; disagreements between methods are appended to `problems`.
std::vector<TableRow> buildTable(const RunConfig& config, std::vector<std::string>& problems);

std::string renderTable(const std::vector<TableRow>& rows, OutputFormat format, bool exactOnly = false);

CommandResult tableCommand(const RunConfig& config);
CommandResult verifyCommand(const RunConfig& config);
CommandResult hvmaxCommand(const RunConfig& config);
CommandResult qubitCommand(const RunConfig& config);
/// N = 3 detail: operators, eigen checks and three-basis HV search for every k.
CommandResult n3Command(const RunConfig& config);

/// Runs a command and converts library exceptions into exit codes.
template <typename Fn>
CommandResult runGuarded(Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    return {ExitCode::InputError, "", {std::string("input error: ") + e.what()}};
  } catch (const GuardViolation& e) {
    return {ExitCode::GuardViolation, "", {std::string("size guard: ") + e.what()}};
  }
}

}  // namespace qmermin
