#include <iostream>
#include <string>
#include <vector>

#include "flagspace/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flagspace::run_cli(args, std::cout, std::cerr);
}
