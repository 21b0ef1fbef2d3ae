#include <iostream>
#include <string>
#include <vector>

#include "glinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return glinv::run_cli(args, std::cout, std::cerr);
}
