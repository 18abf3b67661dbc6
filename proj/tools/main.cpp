#include <iostream>

#include "rbd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rbd::run_cli(args, std::cout, std::cerr);
}
