#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sepder {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_parse = 1;         // bad input or bad usage
inline constexpr int exit_disconnected = 2;  // graph is not connected
inline constexpr int exit_failed = 3;        // a certification or bound failed

struct RunConfig {
  std::string input_path;         // graph file; directory for census
  std::string format = "auto";    // edge_list | graph6 | auto (by extension)
  std::string command;            // separators | connectivity | poset | generators |
                                  // verify | degrees | bounds | saito | census
  std::optional<int> cutoff;      // degree cap; SEPDER_CUTOFF, then max degree
                                  // plus two, when absent
  std::vector<int> ordering;      // poset only: print the chain of this ordering
  std::string output = "text";    // text | json | dot (dot: poset only)
};

// Dispatches one subcommand; reports go to out, diagnostics to err.
// Returns one of the exit codes above. Identical input and config
// produce byte-identical output.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace sepder
