#include <iostream>

#include "tropval_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tropval::cli::run(args, std::cout, std::cerr);
}
