#include <iostream>
#include <string>
#include <vector>

#include "ghcs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ghcs::run_cli(args, std::cout, std::cerr);
}
