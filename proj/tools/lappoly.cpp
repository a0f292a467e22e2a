#include <iostream>

#include "lappoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lappoly::run_cli(args, std::cout);
}
