#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmrt {

enum class Subcommand { Bound, CMTypes, Reflex, Verify61, ClassNumbers, SNF };
enum class OutputFormat { Json, Csv };

struct RunConfig {
  Subcommand subcommand = Subcommand::Verify61;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> g;
  std::optional<std::string> delta_file;
  std::optional<std::string> d_table_file;
  std::optional<std::string> group_spec;
  std::optional<std::string> subgroup_spec;
  std::optional<std::string> conj_spec;
  std::optional<std::string> phi_spec;
  std::optional<std::uint64_t> search_limit;
  std::uint64_t h_max = 1;
  bool fundamental_only = false;
  std::optional<std::string> tsimerman_k;
  std::optional<std::string> tsimerman_delta;
  OutputFormat format = OutputFormat::Json;
};

/// Thrown by parse_arguments for --help; what() is the usage text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitVerification = 2 };

/// Parses command-line arguments (without the program name). Throws
/// InputError on malformed or incomplete arguments.
RunConfig parse_arguments(const std::vector<std::string>& args);

/// Executes one subcommand. Reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// parse_arguments + run, mapping every error to its exit code. `--help`
/// prints usage to `out` and returns 0.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace cmrt
