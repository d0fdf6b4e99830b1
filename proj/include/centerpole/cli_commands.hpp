#pragma once

// Subcommands of the `centerpole` tool. Each takes a fully resolved JSON
// config (flags merged with an optional --config file) and returns the text to
// emit plus an exit code: 0 ok, 1 mathematical failure found, 2 usage error.

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "centerpole/json_io.hpp"

namespace centerpole::cli {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CommandOutput {
    int exit_code = exit_ok;
    Json document;
    std::string text;  // what gets written: the JSON dump, or CSV/pretty renderings
    std::string extension = "json";
};

/// "sandwich(k,s)", an inline JSON array, or a path to a JSON file holding an
/// array (or an object with a "points" array).
Json load_point_document(const std::string& spec);
std::vector<LatticePoint> parse_centers(const std::string& spec);
std::vector<RationalPoint> parse_rational_points(const std::string& spec);

/// Keys of `file` override keys of `flags`.
Json merge_config(Json flags, const Json& file);

CommandOutput run_sandwich(const Json& config);
CommandOutput run_cover_verify(const Json& config);
CommandOutput run_tshape(const Json& config);
CommandOutput run_certify(const Json& config);
CommandOutput run_coloring_scan(const Json& config);

/// Dispatch by subcommand name; unknown names raise UsageError.
CommandOutput run_command(const std::string& name, const Json& config);

/// Full command line handling; writes the document to `out` or to the output file.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace centerpole::cli
