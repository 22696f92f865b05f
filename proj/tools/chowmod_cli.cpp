#include <iostream>

#include "chowmod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chowmod::run_cli(args, std::cout);
}
