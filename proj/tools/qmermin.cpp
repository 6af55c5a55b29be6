// qmermin: Mermin operators for N-qutrit GHZ states.
//
//   qmermin table  --n-min 4 --n-max 13 --method all
//   qmermin verify --n-min 3 --n-max 10
//   qmermin hvmax  --n-min 9 --n-max 9 --k 0 --format json
//   qmermin n3
//   qmermin qubit  --n-min 3 --n-max 12
//
// Exit codes: 0 success, 2 input error, 3 size guard, 4 verification
// failure, 5 method disagreement.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "qmermin/report.hpp"

namespace {

using qmermin::ExitCode;
using qmermin::MethodSelection;
using qmermin::OutputFormat;
using qmermin::RunConfig;
using qmermin::WVariant;

struct CliOptions {
  RunConfig config;
  int k = -1;
};

void addCommonOptions(CLI::App* cmd, CliOptions& opts) {
  auto& c = opts.config;
  cmd->add_option("--n-min", c.nMin, "Smallest qutrit count N")->capture_default_str();
  cmd->add_option("--n-max", c.nMax, "Largest qutrit count N")->capture_default_str();
  cmd->add_option("--k", opts.k, "GHZ index k (0, 1 or 2); default: all / automatic")->check(CLI::Range(0, 2));
  cmd->add_option("--method", c.method, "HV maximization method")
      ->transform(CLI::CheckedTransformer(std::map<std::string, MethodSelection>{{"brute", MethodSelection::Brute},
                                                                                 {"symmetric", MethodSelection::Symmetric},
                                                                                 {"theorem", MethodSelection::Theorem},
                                                                                 {"all", MethodSelection::All}},
                                          CLI::ignore_case));
  cmd->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"json", OutputFormat::Json},
                                                                              {"csv", OutputFormat::Csv},
                                                                              {"markdown", OutputFormat::Markdown}},
                                          CLI::ignore_case));
  cmd->add_option("--w-variant", c.wVariant, "Third-basis W matrix used for N = 3")
      ->transform(CLI::CheckedTransformer(std::map<std::string, WVariant>{{"conjugation", WVariant::Conjugation},
                                                                          {"displayed", WVariant::Displayed}},
                                          CLI::ignore_case));
  cmd->add_flag("--exact-only", c.exactOnly, "Omit floating-point columns");
  cmd->add_option("--jobs", c.jobs, "Worker threads for exhaustive search")->capture_default_str();
  cmd->add_option("--max-brute-n", c.maxBruteN, "Largest N searched exhaustively")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mermin operators, quantum values and hidden-variable maxima for N-qutrit GHZ states"};
  app.require_subcommand(1);

  CliOptions opts;
  try {
    qmermin::applyEnvironmentOverrides(opts.config);
  } catch (const qmermin::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::InputError);
  }

  auto* table = app.add_subcommand("table", "Reproduce the table of M_Q, M_HVM and A = M_Q/M_HVM");
  auto* verify = app.add_subcommand("verify", "Check eigenstates, partitions and the closed-form identity");
  auto* hvmax = app.add_subcommand("hvmax", "Hidden-variable maxima per (N, k)");
  auto* n3 = app.add_subcommand("n3", "N = 3 three-basis operators, eigen checks and HV search");
  auto* qubit = app.add_subcommand("qubit", "Compare with the d = 2 Mermin construction");
  for (auto* cmd : {table, verify, hvmax, n3, qubit}) addCommonOptions(cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::InputError);
  }

  if (opts.k >= 0) opts.config.k = opts.k;

  qmermin::CommandResult result;
  if (table->parsed()) {
    result = qmermin::tableCommand(opts.config);
  } else if (verify->parsed()) {
    result = qmermin::verifyCommand(opts.config);
  } else if (hvmax->parsed()) {
    result = qmermin::hvmaxCommand(opts.config);
  } else if (n3->parsed()) {
    result = qmermin::n3Command(opts.config);
  } else {
    result = qmermin::qubitCommand(opts.config);
  }

  std::cout << result.output;
  for (const auto& line : result.diagnostics) std::cerr << line << "\n";
  return static_cast<int>(result.code);
}
