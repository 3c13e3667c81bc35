#include <iostream>

#include "merv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return merv::cli::run(args, std::cout, std::cerr);
}
