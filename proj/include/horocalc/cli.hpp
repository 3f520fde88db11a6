#pragma once

#include <string>
#include <vector>

namespace horocalc {

struct CommandResult {
  int exit_code = 0;
  std::string output;                    // stdout payload (already serialized)
  std::vector<std::string> diagnostics;  // stderr lines; nonempty implies exit_code != 0
};

// Dispatches the subcommands roots, flag-dim, index, pasquier-table,
// orbit-dim, vmrt-stratify and spinor-check.  argv[0] is the program name.
// Output is byte-identical for identical arguments and seeds.
CommandResult run(const std::vector<std::string>& argv);

}  // namespace horocalc
