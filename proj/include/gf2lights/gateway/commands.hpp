#pragma once

// Command-line subcommands. Each writes its report to `out`, diagnostics to
// `err`, and returns the process exit code.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gf2lights/transfer.hpp"

namespace gf2lights::gateway {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kUnsolvable = 2,
  kCellTooLarge = 3,
  kVerificationFailed = 4,
};

// Prints the 1-based vertices of the canonical click set turning the board
// off, space separated; or "UNSOLVABLE" and a witness line.
int solve_board_command(const std::string& board_path, const std::optional<std::string>& graph_path,
                        std::ostream& out, std::ostream& err);

// Random symmetric matrices of sides 1..max_dim; deterministic in `seed`.
int verify_theorem_command(std::size_t trials, std::size_t max_dim, std::uint64_t seed, std::ostream& out,
                           std::ostream& err);

// Prints "<bits> <certificate>", or the full prefix set as JSON when
// `as_json` is set.
int prefix_command(const std::string& spec_path, std::size_t p, PrefixMode mode, bool as_json, std::ostream& out,
                   std::ostream& err);

int rank_command(const std::string& matrix_path, std::ostream& out, std::ostream& err);

}  // namespace gf2lights::gateway
