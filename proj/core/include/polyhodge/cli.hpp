#pragma once

#include "polyhodge/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyhodge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitValidation = 4;

enum class Command { Sectors, Hodge, Spectrum, Jordan, Polarize, Check };

struct RunConfig {
  Command command = Command::Sectors;
  std::optional<std::vector<Int>> weights;      // --weights a,b,c
  std::optional<std::string> polytope_path;     // --polytope PATH
  Format format = Format::Text;                 // --format text|json|latex
  std::optional<std::string> output_path;       // --output PATH
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses subcommand-style arguments (argv without the program name).
// Throws UsageError on unknown commands/flags, missing or conflicting input
// selectors, or malformed weight lists.
RunConfig parse_args(const std::vector<std::string>& args);

// The full invariant suite over one input; every item carries a name and,
// on failure, a short diagnostic.
struct CheckReport {
  struct Item {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;
  bool pass = false;
};

CheckReport run_checks(const LoadedInput& input);

std::string emit_check(const CheckReport& report, Format format);

// Executes one parsed command. Never throws: input problems come back as the
// documented exit codes (2 usage, 3 parse, 4 validation, 1 failed checks)
// with a diagnostic message; success returns 0 with the rendered document.
struct RunResult {
  int exit_code = 0;
  std::string output;       // rendered document (stdout)
  std::string diagnostics;  // human-readable error text (stderr)
};
RunResult run_command(const RunConfig& config);

// parse_args + run_command + --output handling; returns the process exit code.
int cli_main(int argc, char** argv);

std::string usage_text();

}  // namespace polyhodge
