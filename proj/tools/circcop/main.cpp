#include <iostream>
#include <string>
#include <vector>

#include "circcop_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return circcop::cli::run_cli(args, std::cout, std::cerr);
}
