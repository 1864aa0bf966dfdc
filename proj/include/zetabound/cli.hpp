#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zetabound::cli {

enum class Command { reproduce_paper, verify_region, verify_tail, scan_zeta, oracle_suite, compute_constants, optimize };

Command parse_command(std::string_view name);  // throws UsageError
std::string_view to_string(Command c);
const std::vector<std::string_view>& command_names();

/// Bad keys, missing keys, unparsable values, unwritable output: exit 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_refuted = 2, exit_inconclusive = 3 };

struct RunConfig {
    Command command = Command::reproduce_paper;
    std::map<std::string, std::string> params;
    std::uint64_t seed = 0;
    /// recorded verbatim in the output header
    std::string command_line;
};

/// Keys accepted by one command.
std::vector<std::string> command_keys(Command c);
/// Every key any command understands (also the valid config-file keys).
const std::vector<std::string>& known_keys();

/// Flat "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path);

struct RunResult {
    int exit_code = exit_ok;
    /// full JSON (or CSV) document as written
    std::string output;
    /// one-line human summary
    std::string summary;
};

/// Executes the command. Writes `output` to params["out"] when present.
/// Throws UsageError for config problems; every other outcome is in exit_code.
RunResult run(const RunConfig& config);

}  // namespace zetabound::cli
