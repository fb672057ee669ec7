#include <iostream>
#include <string>
#include <vector>

#include "triassoc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return triassoc::cli::run(args, std::cin, std::cout, std::cerr);
}
