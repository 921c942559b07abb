#pragma once

// Command surface of the `repsum` tool. Each command writes its report to
// `out`, diagnostics to `err`, and returns the process exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "repsum/reduction.hpp"

namespace repsum::cli {

enum ExitCode : int {
  kOk = 0,
  kIdentityFailure = 1,
  kUsage = 2,
  kCeilingExceeded = 3,
  kInputError = 4,
  kMismatch = 5,
};

enum class Command { eval, diff, detect, harmonic, identity, bench };
enum class Mode { naive, reduced, both };
enum class Output { json, csv, plain };

struct CliConfig {
  Command command = Command::eval;
  std::optional<std::string> sequence_path;
  std::int64_t first_index = 1;

  std::int64_t order = 1;
  std::int64_t lower = 1;
  std::int64_t upper = 1;
  std::int64_t n = 1;
  std::int64_t max_order = 10;

  Mode mode = Mode::reduced;
  Output output = Output::json;
  std::uint64_t naive_ceiling = kDefaultNaiveCeiling;
  bool literal = false;
  bool verbose = false;
  bool check = false;

  std::string identity_id;
  bool list_identities = false;
  std::optional<std::int64_t> max_n;
  std::optional<std::int64_t> max_m;
  std::optional<std::int64_t> max_k;

  std::vector<std::int64_t> bench_orders{1, 2, 5, 10};
  std::vector<std::int64_t> bench_uppers{10};
};

int cmd_eval(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_diff(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_detect(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_harmonic(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_identity(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (args[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repsum::cli
