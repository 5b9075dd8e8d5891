#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "mothernet/words.hpp"

namespace mothernet::cli {

enum ExitCode : int {
  ok = 0,
  check_failed = 1,
  usage_error = 2,
  infinite_resistance = 3,
  cap_exceeded = 4,
  solver_failed = 5,
};

/// "2" -> constant, "3,2,4" -> repeating pattern.
TreeShape parse_shape(std::string_view text);
/// "3,2,4" -> padded by the last entry.
TreeShape parse_shape_list(std::string_view text);

/// Position ranges: "0", "0-3" (inclusive), "4-" (to the end), or a comma list
/// of those. Returns sorted, distinct positions below `limit`.
std::vector<std::uint64_t> parse_positions(std::string_view text, std::uint64_t limit);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mothernet::cli
