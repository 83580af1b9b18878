#pragma once

// Command-line surface: spec-file parsing, window serialization and the
// `neumann` subcommands.
//
// Exit codes: 0 success / verified, 1 checked and failed, 2 usage or parse
// error, 3 the window is too small for the requested check.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "neumann/involution.hpp"

namespace neumann::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIncomplete = 3;

/// One `block <case_id>` per line; `#` starts a comment line; blank lines
/// are ignored. Throws ParseError.
std::vector<int> parse_spec(std::string_view text);
std::vector<int> read_spec_file(const std::filesystem::path& path);

/// Lines `n <iota(n)> <delta_n>` sorted by n.
void write_window(std::ostream& os, const InvolutionWindow& w);
/// Inverse of write_window; rows must cover a contiguous range. Throws
/// ParseError.
InvolutionWindow parse_window(std::string_view text);

/// Runs a subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace neumann::cli
