#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  apx::cli::CliResult result = apx::cli::run_cli(args);
  std::cout << result.out;
  return result.exit_code;
}
