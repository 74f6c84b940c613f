#include <iostream>

#include "gcl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const gcl::cli::CommandResult res = gcl::cli::run(args);
  (res.exit_code == 2 ? std::cerr : std::cout) << res.text();
  return res.exit_code;
}
