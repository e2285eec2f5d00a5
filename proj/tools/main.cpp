#include <iostream>
#include <string>
#include <vector>

#include "oddtown/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return oddtown::run_cli(args, std::cout, std::cerr);
}
