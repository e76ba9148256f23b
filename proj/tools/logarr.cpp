#include <iostream>

#include "logarr/cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return logarr::cli::run(args, std::cout, std::cerr);
}
