#include <iostream>
#include <string>
#include <vector>

#include "hhsl2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hhsl2::run_cli(args, std::cout, std::cerr);
}
