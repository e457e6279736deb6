#include <iostream>
#include <string>
#include <vector>

#include "glassnet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return glassnet::run(args, std::cout, std::cerr);
}
