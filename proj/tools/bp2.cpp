#include <iostream>
#include <string>
#include <vector>

#include "bp2_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bp2::cli::run(args, std::cin, std::cout, std::cerr);
}
