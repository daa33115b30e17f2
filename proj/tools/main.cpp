#include <iostream>
#include <string>
#include <vector>

#include "upmnet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return upmnet::run(args, std::cin, std::cout, std::cerr);
}
