#include <iostream>
#include <string>
#include <vector>

#include "ksync/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ksync::run_cli(args, std::cout, std::cerr);
}
