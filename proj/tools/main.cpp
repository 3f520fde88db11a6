#include <iostream>
#include <string>
#include <vector>

#include "horocalc/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const horocalc::CommandResult result = horocalc::run(args);
  if (!result.output.empty()) std::cout << result.output;
  for (const std::string& line : result.diagnostics) std::cerr << line << '\n';
  return result.exit_code;
}
