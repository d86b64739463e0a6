#ifndef WPVOL_CLI_HPP
#define WPVOL_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpvol/genexp.hpp"
#include "wpvol/tau.hpp"

namespace wpvol::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kIoError = 3,
};

enum class Command { kTau, kVolume, kSeries, kVerify, kAsympt };
enum class Format { kPlain, kJson, kCsv };
enum class Suite { kLemma, kTheorem1, kDerivative, kInduction, kAll };

/// A parsed command line. Fields not used by `command` keep their defaults.
struct RunConfig {
  Command command = Command::kTau;
  Format format = Format::kPlain;
  std::optional<std::string> cache_path;
  std::optional<int> digits;
  int threads = 1;

  int genus = 0;
  std::vector<int> ds;           // tau
  std::optional<int> n;          // volume
  std::optional<int> table;      // volume: last n of the table
  int order = 0;                 // series, verify
  Suite suite = Suite::kAll;     // verify
  std::optional<int> n_min;      // asympt; defaults to n_max / 2
  int n_max = 0;                 // asympt
};

/// Raised for flag combinations that parse but make no sense.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Runs one verification suite for genus g with series truncated at `order`.
/// Reports come back in a fixed order.
std::vector<CheckReport> run_suite(Suite suite, int g, int order, TauCalculator& calc);

/// Parses a command line (without the program name). Returns the config, or
/// the exit code to return immediately (help output, parse errors).
struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kOk;
};
ParseResult parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes a config against an optional on-disk cache.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse + execute.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wpvol::cli

#endif  // WPVOL_CLI_HPP
