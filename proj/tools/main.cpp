#include <iostream>

#include "liebreadth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liebreadth::run_cli(args, std::cin, std::cout, std::cerr);
}
