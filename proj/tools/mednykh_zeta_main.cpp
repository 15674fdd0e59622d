#include <iostream>
#include <string>
#include <vector>

#include "mz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mz::run_cli(args, std::cout, std::cerr);
}
