#include <iostream>
#include <vector>

#include "qci/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qci::run_command(args, std::cout, std::cerr);
}
