#include <iostream>
#include <string>
#include <vector>

#include "fringe/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fringe::run_cli(args, std::cout, std::cerr);
}
