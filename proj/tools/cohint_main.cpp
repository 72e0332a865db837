#include <iostream>
#include <string>
#include <vector>

#include "cohint/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cohint::run_cli(args, std::cout, std::cerr);
}
