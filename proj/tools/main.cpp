#include <iostream>
#include <string>
#include <vector>

#include "braid3/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return braid3::run_cli(args, std::cout, std::cerr);
}
