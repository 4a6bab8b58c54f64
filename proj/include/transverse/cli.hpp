#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace transverse {

/// Verb plus validated option values as given on the command line (flag
/// names without the leading dashes).
struct Command {
  std::string verb;
  std::map<std::string, std::string> options;
  std::vector<std::string> argv;
};

/// Exit codes of the command-line contract.
enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitInput = 2, kExitGenericity = 3 };

struct Report {
  nlohmann::json body;
  int exit_code = kExitOk;
};

/// Parses and validates arguments (program name excluded). Throws
/// InputError naming the offending flag or verb.
Command parse_command(const std::vector<std::string>& args);

/// Runs the command. Input and precondition errors become exit 2 reports,
/// exhausted genericity certification exit 3.
Report execute(const Command& cmd);

/// Report for arguments that failed to parse.
Report usage_report(const std::vector<std::string>& args, const std::string& message);

/// parse_command + execute, catching usage errors.
Report run_cli(const std::vector<std::string>& args);

}  // namespace transverse
