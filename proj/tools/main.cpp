#include <iostream>
#include <string>
#include <vector>

#include "oreforce/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return oreforce::run_cli(args, std::cin, std::cout, std::cerr);
}
