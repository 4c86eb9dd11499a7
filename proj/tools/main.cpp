#include <iostream>
#include <vector>

#include "liemf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liemf::run_cli(args, std::cout, std::cerr);
}
